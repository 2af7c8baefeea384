use std::collections::{BTreeMap, HashMap};

use super::resolution::Budget;
use crate::error::ResourceLimit;
use crate::f2::{BitMatrix, BitVec, TauPoly, TauPolyMatrix};
use crate::motivic::{motivic_coproduct, motivic_monomial_basis, MotivicMonomial};
use crate::steenrod::{coproduct, milnor_basis, DualMonomial};

/// Reduced cobar complex of the classical dual Steenrod algebra: the
/// (s, t) block is spanned by s-fold tensors of positive-degree Milnor
/// monomials of total degree t, and `diffs[(s, t)]` sends that block into
/// (s+1, t) (rows = source basis, columns = target basis).
#[derive(Debug)]
pub struct ClassicalCobar {
    max_s: u32,
    max_t: u32,
    bases: BTreeMap<(u32, u32), Vec<Vec<DualMonomial>>>,
    diffs: BTreeMap<(u32, u32), BitMatrix>,
}

/// All s-tuples of positive-degree monomials with total degree t, in
/// lexicographic order.
fn classical_tensors(s: u32, t: u32) -> Vec<Vec<DualMonomial>> {
    fn rec(slots: u32, degree: u32, prefix: &mut Vec<DualMonomial>, out: &mut Vec<Vec<DualMonomial>>) {
        if slots == 0 {
            if degree == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for d in 1..=degree.saturating_sub(slots - 1) {
            for m in milnor_basis(d) {
                prefix.push(m);
                rec(slots - 1, degree - d, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(s, t, &mut Vec::new(), &mut out);
    out
}

impl ClassicalCobar {
    pub fn max_s(&self) -> u32 {
        self.max_s
    }

    pub fn max_t(&self) -> u32 {
        self.max_t
    }

    pub fn basis(&self, s: u32, t: u32) -> &[Vec<DualMonomial>] {
        self.bases.get(&(s, t)).map_or(&[], Vec::as_slice)
    }

    pub fn differential(&self, s: u32, t: u32) -> Option<&BitMatrix> {
        self.diffs.get(&(s, t))
    }

    fn rank(&self, s: u32, t: u32) -> usize {
        self.diffs.get(&(s, t)).map_or(0, BitMatrix::rank)
    }

    /// dim H^{s,t} = dim C^{s,t} - rank d^s - rank d^{s-1}. Needs the
    /// outgoing differential, so s must be below max_s.
    pub fn homology_dim(&self, s: u32, t: u32) -> usize {
        assert!(s < self.max_s, "homology needs the outgoing differential");
        let dim = self.basis(s, t).len();
        let out_rank = self.rank(s, t);
        let in_rank = if s == 0 { 0 } else { self.rank(s - 1, t) };
        dim - out_rank - in_rank
    }
}

pub fn classical_cobar(max_s: u32, max_t: u32, budget: Budget) -> Result<ClassicalCobar, ResourceLimit> {
    let mut bases = BTreeMap::new();
    let mut last_completed = (0u32, 0u32);
    for s in 0..=max_s {
        for t in 0..=max_t {
            let basis = classical_tensors(s, t);
            if basis.len() > budget.max_block_dim {
                return Err(ResourceLimit {
                    stage: "classical cobar",
                    last_s: last_completed.0,
                    last_t: last_completed.1,
                });
            }
            last_completed = (s, t);
            bases.insert((s, t), basis);
        }
    }
    let mut diffs = BTreeMap::new();
    for s in 0..max_s {
        for t in 0..=max_t {
            let source = &bases[&(s, t)];
            let target = &bases[&(s + 1, t)];
            let target_index: HashMap<&[DualMonomial], usize> = target
                .iter()
                .enumerate()
                .map(|(i, tup)| (tup.as_slice(), i))
                .collect();
            let mut m = BitMatrix::zeros(source.len(), target.len());
            for (row, tuple) in source.iter().enumerate() {
                let mut acc = BitVec::zeros(target.len());
                for i in 0..tuple.len() {
                    for (l, r) in coproduct(&tuple[i]).support() {
                        if l.is_one() || r.is_one() {
                            continue; // reduced coproduct
                        }
                        let mut spliced = Vec::with_capacity(tuple.len() + 1);
                        spliced.extend_from_slice(&tuple[..i]);
                        spliced.push(l.clone());
                        spliced.push(r.clone());
                        spliced.extend_from_slice(&tuple[i + 1..]);
                        acc.toggle(target_index[spliced.as_slice()]);
                    }
                }
                m.set_row(row, &acc);
            }
            diffs.insert((s, t), m);
        }
    }
    Ok(ClassicalCobar {
        max_s,
        max_t,
        bases,
        diffs,
    })
}

/// Reduced cobar complex of the C-motivic dual Steenrod algebra over
/// GF(2)[t]. Blocks are indexed by (s, total topological degree) only: the
/// basis tensors within a degree block mix weights, and weight homogeneity
/// forces every differential entry to be a single t-monomial.
/// `diffs[(s, deg)]` has rows indexed by the (s+1)-block and columns by the
/// s-block, acting on column vectors.
#[derive(Debug)]
pub struct MotivicCobar {
    max_s: u32,
    max_degree: u32,
    bases: BTreeMap<(u32, u32), Vec<Vec<MotivicMonomial>>>,
    diffs: BTreeMap<(u32, u32), TauPolyMatrix>,
}

fn motivic_tensors(s: u32, degree: u32) -> Vec<Vec<MotivicMonomial>> {
    fn rec(
        slots: u32,
        degree: u32,
        prefix: &mut Vec<MotivicMonomial>,
        out: &mut Vec<Vec<MotivicMonomial>>,
    ) {
        if slots == 0 {
            if degree == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for d in 1..=degree.saturating_sub(slots - 1) {
            for m in motivic_monomial_basis(d) {
                prefix.push(m);
                rec(slots - 1, degree - d, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(s, degree, &mut Vec::new(), &mut out);
    out
}

impl MotivicCobar {
    pub fn max_s(&self) -> u32 {
        self.max_s
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn basis(&self, s: u32, degree: u32) -> &[Vec<MotivicMonomial>] {
        self.bases.get(&(s, degree)).map_or(&[], Vec::as_slice)
    }

    /// Total weight of a basis tensor.
    pub fn tensor_weight(tensor: &[MotivicMonomial]) -> i64 {
        tensor.iter().map(MotivicMonomial::weight).sum()
    }

    pub fn differential(&self, s: u32, degree: u32) -> Option<&TauPolyMatrix> {
        self.diffs.get(&(s, degree))
    }
}

pub fn motivic_cobar(max_s: u32, max_stem: u32, budget: Budget) -> Result<MotivicCobar, ResourceLimit> {
    // stem = degree - s, so the largest degree needed is max_stem + max_s
    let max_degree = max_stem + max_s;
    let mut bases = BTreeMap::new();
    let mut last_completed = (0u32, 0u32);
    for s in 0..=max_s {
        for degree in 0..=max_degree {
            let basis = motivic_tensors(s, degree);
            if basis.len() > budget.max_block_dim {
                return Err(ResourceLimit {
                    stage: "motivic cobar",
                    last_s: last_completed.0,
                    last_t: last_completed.1,
                });
            }
            last_completed = (s, degree);
            bases.insert((s, degree), basis);
        }
    }
    let mut diffs = BTreeMap::new();
    for s in 0..max_s {
        for degree in 0..=max_degree {
            let source = &bases[&(s, degree)];
            let target = &bases[&(s + 1, degree)];
            let target_index: HashMap<&[MotivicMonomial], usize> = target
                .iter()
                .enumerate()
                .map(|(i, tup)| (tup.as_slice(), i))
                .collect();
            let mut m = TauPolyMatrix::zeros(target.len(), source.len());
            for (col, tuple) in source.iter().enumerate() {
                for i in 0..tuple.len() {
                    for (l, r) in motivic_coproduct(&tuple[i]).support() {
                        // reduced: drop terms with a scalar factor (the
                        // right factor never carries a t-power)
                        if l.is_scalar() || r.is_scalar() {
                            continue;
                        }
                        let scalar = TauPoly::tau_power(l.tau_power() as usize);
                        let mut spliced = Vec::with_capacity(tuple.len() + 1);
                        spliced.extend_from_slice(&tuple[..i]);
                        spliced.push(l.without_tau());
                        spliced.push(r.clone());
                        spliced.extend_from_slice(&tuple[i + 1..]);
                        let row = target_index[spliced.as_slice()];
                        let e = m.get_mut(row, col);
                        *e = &*e + &scalar;
                    }
                }
            }
            diffs.insert((s, degree), m);
        }
    }
    Ok(MotivicCobar {
        max_s,
        max_degree,
        bases,
        diffs,
    })
}
