use std::collections::HashMap;

use crate::error::ResourceLimit;
use crate::f2::{BitMatrix, BitVec};
use crate::steenrod::{admissible_basis, multiply, AdmissibleMonomial, SteenrodElement};

/// One homological degree of a minimal free resolution of GF(2) over the
/// Steenrod algebra. Generator g has internal degree `generators[g]`, and
/// `differentials[g][j]` is its coefficient on generator j of the previous
/// column. Generator counts per internal degree are the Ext dimensions.
#[derive(Clone, Debug)]
pub struct FreeResolutionColumn {
    s: u32,
    generators: Vec<u32>,
    differentials: Vec<Vec<SteenrodElement>>,
}

impl FreeResolutionColumn {
    pub fn s(&self) -> u32 {
        self.s
    }

    /// Internal degrees of the generators, in adjunction order.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn differential(&self, g: usize) -> &[SteenrodElement] {
        &self.differentials[g]
    }

    pub fn dim(&self, t: u32) -> usize {
        self.generators.iter().filter(|&&d| d == t).count()
    }

    /// GF(2)-basis of this free module in internal degree t: a generator
    /// paired with an admissible monomial making up the degree.
    pub fn basis_at(&self, t: u32) -> Vec<(usize, AdmissibleMonomial)> {
        let mut out = Vec::new();
        for (g, &d) in self.generators.iter().enumerate() {
            if d > t {
                continue;
            }
            for m in admissible_basis(t - d) {
                out.push((g, m));
            }
        }
        out
    }
}

/// Caps the GF(2) dimension of any single bidegree block. Exceeding it
/// aborts with a [`ResourceLimit`] that reports the last completed bidegree.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_block_dim: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_block_dim: 200_000,
        }
    }
}

type ProductCache = HashMap<(AdmissibleMonomial, AdmissibleMonomial), SteenrodElement>;

fn multiply_monomials<'a>(
    cache: &'a mut ProductCache,
    a: &AdmissibleMonomial,
    b: &AdmissibleMonomial,
) -> &'a SteenrodElement {
    cache.entry((a.clone(), b.clone())).or_insert_with(|| {
        multiply(
            &SteenrodElement::from_monomial(a.clone()),
            &SteenrodElement::from_monomial(b.clone()),
        )
    })
}

/// Incremental GF(2) row-span with membership testing.
struct SpanBasis {
    rows: Vec<(usize, BitVec)>, // (pivot position, reduced row)
}

impl SpanBasis {
    fn new() -> Self {
        SpanBasis { rows: Vec::new() }
    }

    /// Reduces `v` against the span; adds it and returns true when it was
    /// independent.
    fn insert(&mut self, mut v: BitVec) -> bool {
        for (p, row) in &self.rows {
            if v.get(*p) {
                v.xor_assign(row);
            }
        }
        match v.first_set() {
            None => false,
            Some(p) => {
                self.rows.push((p, v));
                true
            }
        }
    }
}

/// Minimal free resolution of GF(2) over the Steenrod algebra through
/// homological degree `max_s` and internal degree `max_t`.
///
/// Processing runs through internal degrees in increasing order and, within
/// each degree, up the homological column: the kernel of the previous
/// differential is computed, the part already hit by existing generators is
/// spanned off, and one new generator is adjoined per missing dimension.
/// New generators pair with positive-degree coefficients only, so the
/// resolution is minimal by construction (still checked in tests).
pub fn minimal_resolution(
    max_s: u32,
    max_t: u32,
    budget: Budget,
) -> Result<Vec<FreeResolutionColumn>, ResourceLimit> {
    let mut columns: Vec<FreeResolutionColumn> = (0..=max_s)
        .map(|s| FreeResolutionColumn {
            s,
            generators: Vec::new(),
            differentials: Vec::new(),
        })
        .collect();
    // F_0 = A on one generator over an empty previous column
    columns[0].generators.push(0);
    columns[0].differentials.push(Vec::new());

    let mut cache: ProductCache = HashMap::new();
    let mut last_completed = (0u32, 0u32);
    for t in 1..=max_t {
        for s in 1..=max_s {
            let source_basis = columns[s as usize - 1].basis_at(t);
            if source_basis.is_empty() {
                continue;
            }
            if source_basis.len() > budget.max_block_dim {
                return Err(ResourceLimit {
                    stage: "minimal resolution",
                    last_s: last_completed.0,
                    last_t: last_completed.1,
                });
            }
            let dim = source_basis.len();
            let index: HashMap<(usize, AdmissibleMonomial), usize> = source_basis
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, key)| (key, i))
                .collect();

            // Kernel of d_{s-1} in degree t. For s = 1 the augmentation is
            // zero in positive degrees, so the kernel is everything.
            let kernel: Vec<BitVec> = if s == 1 {
                (0..dim)
                    .map(|i| {
                        let mut v = BitVec::zeros(dim);
                        v.set(i, true);
                        v
                    })
                    .collect()
            } else {
                let target_basis = columns[s as usize - 2].basis_at(t);
                let target_index: HashMap<(usize, AdmissibleMonomial), usize> = target_basis
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, key)| (key, i))
                    .collect();
                let mut m = BitMatrix::zeros(dim, target_basis.len());
                for (row, (g, mono)) in source_basis.iter().enumerate() {
                    let v = expand_image(
                        &mut cache,
                        &columns[s as usize - 1].differentials[*g],
                        mono,
                        &target_index,
                        target_basis.len(),
                    );
                    m.set_row(row, &v);
                }
                // left null space: rows x with x * m = 0
                let k = m.transpose().kernel_basis();
                (0..k.rows()).map(|r| k.row(r)).collect()
            };

            // Span of the image of d_s from already-adjoined generators.
            let mut span = SpanBasis::new();
            for (g, mono) in columns[s as usize].basis_at(t) {
                let v = expand_image(
                    &mut cache,
                    &columns[s as usize].differentials[g],
                    &mono,
                    &index,
                    dim,
                );
                span.insert(v);
            }
            for v in kernel {
                if span.insert(v.clone()) {
                    // decode v into coefficients over the previous column
                    let prev_gens = columns[s as usize - 1].generators.clone();
                    let mut coeffs: Vec<SteenrodElement> = prev_gens
                        .iter()
                        .map(|&d| SteenrodElement::zero(t - d))
                        .collect();
                    for (i, (g, mono)) in source_basis.iter().enumerate() {
                        if v.get(i) {
                            coeffs[*g].toggle(mono.clone());
                        }
                    }
                    columns[s as usize].generators.push(t);
                    columns[s as usize].differentials.push(coeffs);
                }
            }
            last_completed = (s, t);
        }
    }
    Ok(columns)
}

/// Image of (monomial * generator-with-coefficients) expanded over the
/// indexed basis of the target degree.
fn expand_image(
    cache: &mut ProductCache,
    coeffs: &[SteenrodElement],
    mono: &AdmissibleMonomial,
    index: &HashMap<(usize, AdmissibleMonomial), usize>,
    dim: usize,
) -> BitVec {
    let mut v = BitVec::zeros(dim);
    for (j, c) in coeffs.iter().enumerate() {
        let terms: Vec<AdmissibleMonomial> = c.support().cloned().collect();
        for term in terms {
            let prod = multiply_monomials(cache, mono, &term).clone();
            for p in prod.support() {
                v.toggle(index[&(j, p.clone())]);
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn resolve(max_s: u32, max_t: u32) -> Vec<FreeResolutionColumn> {
        minimal_resolution(max_s, max_t, Budget::default()).unwrap()
    }

    #[test]
    fn column_zero_is_the_ground_field_cover() {
        let res = resolve(3, 6);
        assert_eq!(res[0].generators(), &[0]);
        assert_eq!(res[0].dim(0), 1);
    }

    #[test]
    fn ext_one_detects_the_indecomposables() {
        // dim Ext^{1,t} is 1 at t in {1, 2, 4, 8} and 0 otherwise for t <= 8
        let res = resolve(2, 8);
        for t in 1..=8u32 {
            let expected = usize::from(t.is_power_of_two());
            assert_eq!(res[1].dim(t), expected, "t = {t}");
        }
    }

    #[test]
    fn stem_three_carries_three_dots() {
        let res = resolve(5, 9);
        let total: usize = (1..=5u32).map(|s| res[s as usize].dim(s + 3)).sum();
        assert_eq!(total, 3);
    }

    #[test]
    fn h0_tower_in_stem_zero() {
        let res = resolve(6, 6);
        for s in 0..=6u32 {
            assert_eq!(res[s as usize].dim(s), 1, "s = {s}");
        }
    }

    #[test]
    fn differentials_compose_to_zero() {
        let res = resolve(4, 10);
        let mut cache = ProductCache::new();
        for s in 2..res.len() {
            let col = &res[s];
            let prev = &res[s - 1];
            for (g, &t) in col.generators.iter().enumerate() {
                let target_basis = res[s - 2].basis_at(t);
                let target_index: HashMap<(usize, AdmissibleMonomial), usize> = target_basis
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, key)| (key, i))
                    .collect();
                let mut acc = BitVec::zeros(target_basis.len());
                for (j, c) in col.differentials[g].iter().enumerate() {
                    for mono in c.support() {
                        acc.xor_assign(&expand_image(
                            &mut cache,
                            &prev.differentials[j],
                            mono,
                            &target_index,
                            target_basis.len(),
                        ));
                    }
                }
                assert!(acc.is_zero(), "d o d != 0 at s={s}, generator {g}");
            }
        }
    }

    #[test]
    fn resolution_is_minimal() {
        let res = resolve(5, 12);
        for col in &res[1..] {
            for coeffs in &col.differentials {
                for c in coeffs {
                    assert!(
                        c.is_zero() || c.degree() > 0,
                        "unit coefficient in column {}",
                        col.s
                    );
                }
            }
        }
    }

    #[test]
    fn budget_reports_last_completed_bidegree() {
        let err = minimal_resolution(3, 10, Budget { max_block_dim: 2 }).unwrap_err();
        assert_eq!(err.stage, "minimal resolution");
        assert!(err.last_t <= 10);
    }
}
