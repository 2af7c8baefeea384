use std::collections::BTreeMap;

use super::cobar::MotivicCobar;
use crate::f2::{smith_normal_form_full, TauPoly, TauPolyMatrix};

/// A finitely generated GF(2)[t]-module up to isomorphism: a free part and
/// cyclic t-torsion summands GF(2)[t]/t^k, one exponent k per summand,
/// sorted.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TauModuleDescriptor {
    pub free_rank: usize,
    pub torsion_exponents: Vec<usize>,
}

/// Homology generators of a two-step complex over GF(2)[t]:
/// `d_in` maps into the middle term (columns = incoming sources) and
/// `d_out` maps out of it (columns = middle basis). Returns one generator
/// vector per summand of ker(d_out)/im(d_in), paired with its torsion
/// exponent (`None` for a free summand). Zero summands (units in the
/// relation invariant factors) are dropped.
pub fn homology_generators(
    d_in: &TauPolyMatrix,
    d_out: &TauPolyMatrix,
) -> Vec<(Vec<TauPoly>, Option<usize>)> {
    let n = d_out.cols();
    assert_eq!(d_in.rows(), n, "complex terms do not line up");
    let out_snf = smith_normal_form_full(d_out);
    let rank = out_snf.rank;
    // kernel of d_out: the trailing columns of V
    let kernel: Vec<Vec<TauPoly>> = (rank..n).map(|j| out_snf.v.column(j)).collect();
    let k = kernel.len();

    // incoming columns, rewritten in kernel coordinates via V^-1
    let mut relations = TauPolyMatrix::zeros(k, d_in.cols());
    for j in 0..d_in.cols() {
        let y = out_snf.v_inv.mul_column(&d_in.column(j));
        for (i, yi) in y.iter().enumerate() {
            if i < rank {
                assert!(yi.is_zero(), "incoming image escapes the kernel (d o d != 0?)");
            } else {
                *relations.get_mut(i - rank, j) = yi.clone();
            }
        }
    }
    let rel_snf = smith_normal_form_full(&relations);
    // summand generators are the columns of U^-1, with orders from the
    // invariant factors
    let mut out = Vec::new();
    for i in 0..k {
        let order = rel_snf.diagonal.get(i);
        let exponent = match order {
            Some(d) => {
                assert!(
                    d.is_monomial(),
                    "invariant factor is not a t-power: {d}"
                );
                let e = d.degree().unwrap();
                if e == 0 {
                    continue; // unit: summand is zero
                }
                Some(e)
            }
            None => None,
        };
        let coords = rel_snf.u_inv.column(i);
        // back to middle-term coordinates through the kernel basis
        let mut vec = vec![TauPoly::zero(); n];
        for (kidx, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, entry) in kernel[kidx].iter().enumerate() {
                vec[slot] = &vec[slot] + &(entry * c);
            }
        }
        out.push((vec, exponent));
    }
    out
}

/// Homology of the motivic cobar complex at (s, degree) as GF(2)[t]-modules,
/// split by weight. Every homology generator is weight-homogeneous; the
/// weight is read off as (basis weight) - (t-exponent) at any nonzero entry.
pub fn tau_homology_block(
    c: &MotivicCobar,
    s: u32,
    degree: u32,
) -> BTreeMap<i64, TauModuleDescriptor> {
    assert!(s < c.max_s(), "homology needs the outgoing differential");
    let dim = c.basis(s, degree).len();
    let d_out = c
        .differential(s, degree)
        .cloned()
        .unwrap_or_else(|| TauPolyMatrix::zeros(0, dim));
    let d_in = if s == 0 {
        TauPolyMatrix::zeros(dim, 0)
    } else {
        c.differential(s - 1, degree)
            .cloned()
            .unwrap_or_else(|| TauPolyMatrix::zeros(dim, 0))
    };
    let weights: Vec<i64> = c
        .basis(s, degree)
        .iter()
        .map(|t| MotivicCobar::tensor_weight(t))
        .collect();
    let mut out: BTreeMap<i64, TauModuleDescriptor> = BTreeMap::new();
    for (vec, exponent) in homology_generators(&d_in, &d_out) {
        let mut weight: Option<i64> = None;
        for (slot, entry) in vec.iter().enumerate() {
            if let Some(d) = entry.degree() {
                let w = weights[slot] - d as i64;
                match weight {
                    None => weight = Some(w),
                    Some(prev) => assert_eq!(prev, w, "inhomogeneous homology generator"),
                }
            }
        }
        let weight = weight.expect("zero homology generator");
        let descriptor = out.entry(weight).or_default();
        match exponent {
            None => descriptor.free_rank += 1,
            Some(e) => descriptor.torsion_exponents.push(e),
        }
    }
    for d in out.values_mut() {
        d.torsion_exponents.sort_unstable();
    }
    out
}

/// Descriptor at a single bidegree (degree, weight); zero module when the
/// weight carries no homology.
pub fn tau_homology(c: &MotivicCobar, s: u32, degree: u32, weight: i64) -> TauModuleDescriptor {
    tau_homology_block(c, s, degree)
        .remove(&weight)
        .unwrap_or_default()
}

/// Free rank at (s, stem = degree - s), summed over weights. This is the
/// quantity that matches classical Ext dimensions once t is inverted.
pub fn tau_free_rank_in_stem(c: &MotivicCobar, s: u32, stem: u32) -> usize {
    tau_homology_block(c, s, stem + s)
        .values()
        .map(|d| d.free_rank)
        .sum()
}
