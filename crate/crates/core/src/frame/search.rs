use std::collections::BTreeMap;

use super::{frame_from_ortholattice, FiniteOrthoframe, Orthomodel, PointSet};
use crate::error::{FrameError, LogicError};
use crate::lattice::catalogue;
use crate::logic::{eval, Formula, Sequent};

/// Largest frame enumerated relation by relation.
pub const MAX_RAW_POINTS: usize = 6;
/// Largest frame considered at all; above the raw bound only frames of
/// catalogue ortholattices are tried.
pub const MAX_LATTICE_FRAME_POINTS: usize = 12;

const LATTICE_SOURCES: [&str; 9] = [
    "boolean(1)",
    "boolean(2)",
    "MO(2)",
    "boolean(3)",
    "O6",
    "MO(3)",
    "MO(4)",
    "MC8",
    "boolean(4)",
];

/// Every orthoframe on `n` points named `p1 .. pn`. With `sorted_degrees`
/// only relations whose degrees do not increase along the points are kept,
/// which still leaves one representative of each isomorphism class.
pub fn all_frames(n: usize, sorted_degrees: bool) -> Vec<FiniteOrthoframe> {
    assert!(n <= MAX_RAW_POINTS, "raw enumeration is limited to {MAX_RAW_POINTS} points");
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << edges.len() {
        let mut rows = vec![0 as PointSet; n];
        for (k, &(i, j)) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        if sorted_degrees && rows.windows(2).any(|w| w[0].count_ones() < w[1].count_ones()) {
            continue;
        }
        out.push(FiniteOrthoframe::from_rows(rows));
    }
    out
}

struct Problem<'a> {
    atoms: &'a [String],
    /// Premises as (antecedent, succedent) pairs, goal last.
    lhs: Vec<(Formula, Formula)>,
}

impl Problem<'_> {
    /// First assignment of closed sets, in lexicographic order over the
    /// closed-set list, that satisfies the premises and refutes the goal.
    fn refute(&self, f: &FiniteOrthoframe) -> Result<Option<BTreeMap<String, PointSet>>, LogicError> {
        let closed = match f.closed_sets() {
            Ok(c) => c,
            Err(_) => return Ok(None),
        };
        let k = self.atoms.len();
        let mut idx = vec![0usize; k];
        loop {
            let assign: BTreeMap<String, PointSet> = self
                .atoms
                .iter()
                .zip(&idx)
                .map(|(a, &i)| (a.clone(), closed[i]))
                .collect();
            let holds = |(l, r): &(Formula, Formula)| -> Result<bool, LogicError> {
                let x = eval(f, &assign, l)?;
                let y = eval(f, &assign, r)?;
                Ok(x & !y == 0)
            };
            let (goal, prem) = self.lhs.split_last().expect("goal present");
            if !holds(goal)? {
                let mut all = true;
                for p in prem {
                    if !holds(p)? {
                        all = false;
                        break;
                    }
                }
                if all {
                    return Ok(Some(assign));
                }
            }
            // odometer, last atom fastest
            let mut pos = k;
            loop {
                if pos == 0 {
                    return Ok(None);
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < closed.len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }
}

/// Look for a finite orthomodel satisfying every premise and refuting the
/// goal. Catalogue lattice frames of at most `max_points` points are tried
/// first, by size, then all frames of up to `min(max_points, 6)` points in
/// increasing size. `None` only means nothing was found within the bound.
pub fn countermodel_search(
    premises: &[Sequent],
    goal: &Sequent,
    max_points: usize,
    atoms: &[String],
) -> Result<Option<Orthomodel>, FrameError> {
    if max_points > MAX_LATTICE_FRAME_POINTS {
        return Err(FrameError::SizeBound(format!(
            "max_points {max_points}, at most {MAX_LATTICE_FRAME_POINTS} allowed"
        )));
    }
    for s in premises.iter().chain(std::iter::once(goal)) {
        if let Some(a) = s.atoms().into_iter().find(|a| !atoms.contains(a)) {
            return Err(LogicError::Unassigned(a).into());
        }
    }
    let mut atoms = atoms.to_vec();
    atoms.sort();
    atoms.dedup();
    let lhs = premises
        .iter()
        .chain(std::iter::once(goal))
        .map(|s| (s.antecedent(), s.succedent.clone()))
        .collect();
    let problem = Problem { atoms: &atoms, lhs };

    let mut lattice_frames: Vec<(usize, &str, FiniteOrthoframe)> = Vec::new();
    for name in LATTICE_SOURCES {
        let l = catalogue(name)?;
        if l.len() - 1 <= max_points {
            let (f, _) = frame_from_ortholattice(&l)?;
            lattice_frames.push((f.len(), name, f));
        }
    }
    lattice_frames.sort_by_key(|(n, _, _)| *n);
    for (_, _, f) in lattice_frames {
        if let Some(assign) = problem.refute(&f)? {
            return Ok(Some(Orthomodel::new(f, assign)?));
        }
    }
    for n in 1..=max_points.min(MAX_RAW_POINTS) {
        for f in all_frames(n, true) {
            if let Some(assign) = problem.refute(&f)? {
                return Ok(Some(Orthomodel::new(f, assign)?));
            }
        }
    }
    Ok(None)
}
