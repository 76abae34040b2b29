use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use onionpeel::branch::{decompose_pipeline, treewidth_bound};
use onionpeel::generators::{corpus, gen_counterexample, gen_cycle};
use onionpeel::oracles::{brute_branchwidth, brute_outerplanarity, certify_theorem1, OracleBudget};
use onionpeel::peel::verify_forest_bound;
use onionpeel::triangulate::{to_full_triangulation, to_triangulated_disk};
use onionpeel::{
    build_rooted_forest, onion_peels, saturate_inward_neighbors, write_epg, Embedding, SimpleGraph,
};

type Outcome = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

/// Corpus instances large enough for the conversions (at least 3 vertices).
fn instances(all: &[(String, Embedding)]) -> impl Iterator<Item = &(String, Embedding)> {
    all.iter().filter(|(_, g)| g.vertex_count() >= 3)
}

fn square_to_k4() -> Outcome {
    let start = Instant::now();
    let budget = OracleBudget::default();
    let c4 = gen_cycle(4).unwrap();
    let before = brute_outerplanarity(&c4.graph(), &budget).map_err(|e| e.to_string())?;
    ensure(before == 1, || format!("4-cycle outerplanarity {before}"))?;
    let t = to_full_triangulation(&c4)
        .map_err(|e| e.to_string())?
        .triangulation;
    ensure(t.graph() == SimpleGraph::complete(4), || {
        "triangulation is not K4".into()
    })?;
    let after = brute_outerplanarity(&t.graph(), &budget).map_err(|e| e.to_string())?;
    ensure(after == 2, || format!("K4 outerplanarity {after}"))?;
    within(Duration::from_secs(1), start)?;
    Ok(format!("C4 -> 1, K4 -> 2 in {:.1?}", start.elapsed()))
}

fn gadget_lower_bound() -> Outcome {
    let start = Instant::now();
    let budget = OracleBudget::default();
    let mut notes = Vec::new();
    for k in 1..=3 {
        let r = certify_theorem1(k, &budget).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("k={k}: {r:?}"))?;
        if k >= 2 {
            ensure(r.triangulations == 132, || {
                format!("k={k}: {} triangulations", r.triangulations)
            })?;
        }
        notes.push(format!(
            "k={k}: {} triangulations, min {}",
            r.triangulations, r.min_outerplanarity
        ));
    }
    for k in 2..=6 {
        let g = gen_counterexample(k).unwrap();
        let t = to_full_triangulation(&g).map_err(|e| e.to_string())?;
        let peels = onion_peels(&t.triangulation).k();
        ensure(peels == k as usize + 1, || {
            format!("G_{k} triangulates to {peels} peels")
        })?;
    }
    within(Duration::from_secs(60), start)?;
    Ok(format!(
        "{}; G_2..G_6 triangulate to k+1 peels, {:.1?}",
        notes.join("; "),
        start.elapsed()
    ))
}

fn disk_conversion(all: &[(String, Embedding)]) -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for (name, g) in instances(all) {
        let out = to_triangulated_disk(g).map_err(|e| format!("{name}: {e}"))?;
        ensure(out.disk.is_triangulated_disk(), || {
            format!("{name}: not a triangulated disk")
        })?;
        ensure(out.disk.outer_vertices() == g.outer_vertices(), || {
            format!("{name}: outer vertices changed")
        })?;
        let (k_in, k_out) = (onion_peels(g).k(), onion_peels(&out.disk).k());
        ensure(k_out <= k_in, || format!("{name}: {k_in} -> {k_out} peels"))?;
        n += 1;
    }
    within(Duration::from_secs(30), start)?;
    Ok(format!("{n} instances in {:.1?}", start.elapsed()))
}

fn full_triangulation(all: &[(String, Embedding)]) -> Outcome {
    let mut n = 0;
    for (name, g) in instances(all) {
        let out = to_full_triangulation(g).map_err(|e| format!("{name}: {e}"))?;
        ensure(out.triangulation.is_triangulation(), || {
            format!("{name}: not a triangulation")
        })?;
        let (k_in, k_out) = (onion_peels(g).k(), onion_peels(&out.triangulation).k());
        ensure(k_out <= k_in + 1, || {
            format!("{name}: {k_in} -> {k_out} peels")
        })?;
        n += 1;
    }
    Ok(format!("{n} instances"))
}

fn forest_height(all: &[(String, Embedding)]) -> Outcome {
    let mut n = 0;
    for (name, g) in all {
        let k = onion_peels(g).k();
        let sat = saturate_inward_neighbors(g);
        let forest = build_rooted_forest(&sat).map_err(|e| format!("{name}: {e}"))?;
        ensure(forest.height() < k.max(1), || {
            format!("{name}: height {} with k = {k}", forest.height())
        })?;
        let bound = verify_forest_bound(&sat, &forest).map_err(|e| format!("{name}: {e}"))?;
        ensure(bound.k <= bound.height + 1, || format!("{name}: {bound:?}"))?;
        n += 1;
    }
    Ok(format!("{n} instances"))
}

fn width_bound(all: &[(String, Embedding)]) -> Outcome {
    let mut n = 0;
    let mut worst = 0;
    for (name, g) in instances(all) {
        let d = decompose_pipeline(g).map_err(|e| format!("{name}: {e}"))?;
        let k = onion_peels(g).k();
        ensure(d.certificate.width <= 2 * k, || {
            format!("{name}: width {} > 2k = {}", d.certificate.width, 2 * k)
        })?;
        ensure(d.tree.max_degree() <= 3, || {
            format!("{name}: degree {}", d.tree.max_degree())
        })?;
        ensure(
            d.dual_tree.arcs.len() + 1 == d.dual_tree.faces.len(),
            || format!("{name}: dual tree shape"),
        )?;
        worst = worst.max(d.certificate.width);
        n += 1;
    }
    Ok(format!("{n} instances, widest {worst}"))
}

fn oracle_sandwich(all: &[(String, Embedding)]) -> Outcome {
    let start = Instant::now();
    let budget = OracleBudget::default();
    let (mut bw_checked, mut op_checked) = (0, 0);
    for (name, g) in all {
        let k = onion_peels(g).k();
        if g.edge_count() <= budget.max_edges && g.vertex_count() >= 3 {
            let bw = brute_branchwidth(&g.graph(), &budget).map_err(|e| format!("{name}: {e}"))?;
            let width = decompose_pipeline(g)
                .map_err(|e| format!("{name}: {e}"))?
                .certificate
                .width;
            ensure(bw <= width && width <= 2 * k, || {
                format!("{name}: {bw} <= {width} <= {} fails", 2 * k)
            })?;
            bw_checked += 1;
        }
        if g.vertex_count() <= budget.max_vertices {
            let op =
                brute_outerplanarity(&g.graph(), &budget).map_err(|e| format!("{name}: {e}"))?;
            ensure(op <= k, || format!("{name}: oracle {op} > embedding {k}"))?;
            op_checked += 1;
        }
    }
    within(Duration::from_secs(300), start)?;
    Ok(format!(
        "branchwidth on {bw_checked}, outerplanarity on {op_checked} instances, {:.1?}",
        start.elapsed()
    ))
}

fn treewidth_numbers() -> Outcome {
    for k in 1..=10 {
        let tw = treewidth_bound(2 * k);
        ensure(tw == 3 * k - 1, || format!("k={k}: {tw}"))?;
    }
    Ok("tw(2k) = 3k - 1 for k = 1..10".into())
}

fn cli(args: &[&str], stdin: &str) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("onionpeel").chain(args.iter().copied());
    let code = onionpeel::cli::run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, out)
}

fn determinism(all: &[(String, Embedding)]) -> Outcome {
    let dir = std::env::temp_dir().join(format!("onionpeel-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let side = dir.join("side.json");
    let side = side.to_str().unwrap();
    let twice = |args: &[&str], stdin: &str| -> Result<(), String> {
        let mut runs = Vec::new();
        for _ in 0..2 {
            let _ = std::fs::remove_file(side);
            let (code, out) = cli(args, stdin);
            runs.push((code, out, std::fs::read(side).ok()));
        }
        ensure(runs[0] == runs[1], || {
            format!("{args:?} differs between runs")
        })
    };
    let mut commands = 0;
    for (family, param) in [
        ("nested-triangles", "3"),
        ("counterexample", "2"),
        ("wheel", "5"),
        ("path", "4"),
    ] {
        twice(&["gen", family, param], "")?;
        commands += 1;
    }
    twice(
        &["gen", "random-kouter", "3", "--seed", "7", "--width", "4"],
        "",
    )?;
    twice(&["oracle", "theorem1", "--k", "2"], "")?;
    commands += 2;
    for (_, g) in instances(all) {
        let epg = write_epg(g);
        for args in [
            &["peel"][..],
            &["forest"],
            &["disk", "--json", side],
            &["triangulate", "--json", side],
            &["bd"],
            &["pipeline"],
            &["verify"],
        ] {
            twice(args, &epg)?;
            commands += 1;
        }
        if g.vertex_count() <= 7 {
            twice(&["oracle", "outerplanarity"], &epg)?;
            commands += 1;
        }
        if g.edge_count() <= 9 {
            twice(&["oracle", "bw"], &epg)?;
            commands += 1;
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("{commands} command runs byte-identical"))
}

fn main() -> ExitCode {
    let all = corpus(6, 100);
    let criteria: Vec<(&str, Check)> = vec![
        (
            "4-cycle has outerplanarity 1 and triangulates to K4 with 2",
            Box::new(square_to_k4),
        ),
        (
            "triangulations of the gadgets need k+1 peels",
            Box::new(gadget_lower_bound),
        ),
        (
            "disk conversion keeps outer vertices and peels",
            Box::new(|| disk_conversion(&all)),
        ),
        (
            "full triangulation adds at most one peel",
            Box::new(|| full_triangulation(&all)),
        ),
        (
            "saturated BFS forest has height k-1",
            Box::new(|| forest_height(&all)),
        ),
        (
            "branch decomposition width at most 2k",
            Box::new(|| width_bound(&all)),
        ),
        (
            "oracles sandwich the constructions",
            Box::new(|| oracle_sandwich(&all)),
        ),
        ("treewidth bound 3k-1", Box::new(treewidth_numbers)),
        (
            "CLI output is deterministic",
            Box::new(|| determinism(&all)),
        ),
    ];
    println!("acceptance: {} corpus instances", all.len());
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
