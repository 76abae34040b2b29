use crate::embedding::{Dart, Embedding, FaceWalk};

use super::{OracleBudget, OracleError};

/// Catalan number `C_n`, saturating at `u64::MAX`.
pub fn catalan(n: u64) -> u64 {
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
        if c > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    c as u64
}

type Chords = [(usize, usize)];

/// Chord sets of the polygon `p` (indices into the face walk), built by
/// choosing the apex of the triangle on side `p[0]`-`p[last]`.
fn chord_sets(p: &[usize], f: &mut dyn FnMut(&Chords), acc: &mut Vec<(usize, usize)>) {
    fn rec(polys: &mut Vec<Vec<usize>>, acc: &mut Vec<(usize, usize)>, f: &mut dyn FnMut(&Chords)) {
        let Some(p) = polys.pop() else {
            f(acc);
            return;
        };
        if p.len() < 3 {
            rec(polys, acc, f);
            polys.push(p);
            return;
        }
        let last = p.len() - 1;
        for k in 1..last {
            let before = acc.len();
            if k > 1 {
                acc.push((p[0], p[k]));
            }
            if k < last - 1 {
                acc.push((p[k], p[last]));
            }
            polys.push(p[..=k].to_vec());
            polys.push(p[k..].to_vec());
            rec(polys, acc, f);
            polys.truncate(polys.len() - 2);
            acc.truncate(before);
        }
        polys.push(p);
    }
    let mut polys = vec![p.to_vec()];
    rec(&mut polys, acc, f);
}

fn apply_chords(disk: &Embedding, walk: &[Dart], chords: &[(usize, usize)]) -> Embedding {
    let mut out = disk.clone();
    let mut pieces: Vec<Vec<Dart>> = vec![walk.to_vec()];
    for &(a, b) in chords {
        let (u, v) = (walk[a].origin, walk[b].origin);
        let at = pieces
            .iter()
            .position(|p| p.iter().any(|d| d.origin == u) && p.iter().any(|d| d.origin == v))
            .expect("non-crossing chords share a piece");
        let piece = pieces.swap_remove(at);
        let i = piece.iter().position(|d| d.origin == u).expect("on piece");
        let j = piece.iter().position(|d| d.origin == v).expect("on piece");
        let (x, y) = out.split_face(&piece, i, j).expect("chord is new");
        pieces.push(x);
        pieces.push(y);
    }
    out.normalize();
    out
}

/// Calls `f` on every triangulation of `face` (a face of `disk`) that adds
/// only chords absent from `disk`, in a fixed order. Returns the count.
pub fn for_each_face_triangulation(
    disk: &Embedding,
    face: &FaceWalk,
    budget: &OracleBudget,
    mut f: impl FnMut(Embedding),
) -> Result<usize, OracleError> {
    if !face.is_simple() {
        return Err(OracleError::FaceNotSimple);
    }
    let m = face.len();
    if m <= 3 {
        f(disk.clone());
        return Ok(1);
    }
    let needed = catalan(m as u64 - 2);
    if needed > budget.max_chord_sets {
        return Err(OracleError::BudgetExceeded {
            what: "chord sets",
            needed,
            limit: budget.max_chord_sets,
        });
    }
    let walk = face.darts();
    let polygon: Vec<usize> = (0..m).collect();
    let mut count = 0;
    chord_sets(
        &polygon,
        &mut |chords| {
            let clash = chords
                .iter()
                .any(|&(a, b)| disk.are_adjacent(walk[a].origin, walk[b].origin));
            if !clash {
                count += 1;
                f(apply_chords(disk, walk, chords));
            }
        },
        &mut Vec::new(),
    );
    Ok(count)
}

pub fn enumerate_face_triangulations(
    disk: &Embedding,
    face: &FaceWalk,
    budget: &OracleBudget,
) -> Result<Vec<Embedding>, OracleError> {
    let mut out = Vec::new();
    for_each_face_triangulation(disk, face, budget, |t| out.push(t))?;
    Ok(out)
}
