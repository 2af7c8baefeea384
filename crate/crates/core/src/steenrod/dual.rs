use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use super::{AdmissibleMonomial, SteenrodElement};
use crate::error::ParseError;
use crate::f2::{BitMatrix, BitVec};

/// A monomial z1^{e1} z2^{e2} ... in the dual Steenrod algebra, with
/// deg z_i = 2^i - 1 (the unique grading making the coproduct formula
/// homogeneous). `exponents[i]` is the exponent of z_{i+1}; no trailing
/// zeros are stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DualMonomial {
    exponents: Vec<u32>,
}

impl DualMonomial {
    pub fn one() -> Self {
        DualMonomial {
            exponents: Vec::new(),
        }
    }

    /// z_i (1-indexed); z_0 is the unit.
    pub fn zeta(i: u32) -> Self {
        DualMonomial::from_exponents({
            let mut e = vec![0; i as usize];
            if i > 0 {
                e[i as usize - 1] = 1;
            }
            e
        })
    }

    pub fn zeta1_power(e: u32) -> Self {
        DualMonomial::from_exponents(vec![e])
    }

    pub fn from_exponents(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        DualMonomial { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exponents
            .iter()
            .enumerate()
            .map(|(i, &e)| e * ((1u32 << (i + 1)) - 1))
            .sum()
    }

    pub fn multiply(&self, other: &DualMonomial) -> DualMonomial {
        let n = self.exponents.len().max(other.exponents.len());
        let mut e = vec![0; n];
        for (i, v) in e.iter_mut().enumerate() {
            *v = self.exponents.get(i).copied().unwrap_or(0)
                + other.exponents.get(i).copied().unwrap_or(0);
        }
        DualMonomial::from_exponents(e)
    }

    /// self^(2^a); in characteristic 2 this is exponentwise.
    fn power_2a(&self, a: u32) -> DualMonomial {
        DualMonomial::from_exponents(self.exponents.iter().map(|&e| e << a).collect())
    }
}

/// A homogeneous GF(2)-sum of basis tensors in A_* (x) A_*.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualTensor {
    support: BTreeSet<(DualMonomial, DualMonomial)>,
}

impl DualTensor {
    pub fn zero() -> Self {
        DualTensor {
            support: BTreeSet::new(),
        }
    }

    pub fn unit() -> Self {
        let mut t = DualTensor::zero();
        t.toggle(DualMonomial::one(), DualMonomial::one());
        t
    }

    pub fn toggle(&mut self, l: DualMonomial, r: DualMonomial) {
        let key = (l, r);
        if !self.support.remove(&key) {
            self.support.insert(key);
        }
    }

    pub fn support(&self) -> impl Iterator<Item = &(DualMonomial, DualMonomial)> {
        self.support.iter()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    fn multiply(&self, other: &DualTensor) -> DualTensor {
        let mut out = DualTensor::zero();
        for (al, ar) in &self.support {
            for (bl, br) in &other.support {
                out.toggle(al.multiply(bl), ar.multiply(br));
            }
        }
        out
    }

    /// Termwise (2^a)-th power; valid in characteristic 2.
    fn power_2a(&self, a: u32) -> DualTensor {
        let mut out = DualTensor::zero();
        for (l, r) in &self.support {
            out.toggle(l.power_2a(a), r.power_2a(a));
        }
        out
    }
}

/// Coproduct on a single generator: z_i -> sum_k z_{i-k}^{2^k} (x) z_k,
/// with z_0 = 1.
fn generator_coproduct(i: u32) -> DualTensor {
    let mut t = DualTensor::zero();
    for k in 0..=i {
        t.toggle(DualMonomial::zeta(i - k).power_2a(k), DualMonomial::zeta(k));
    }
    t
}

/// Multiplicative extension of the generator coproduct to monomials.
pub fn coproduct(m: &DualMonomial) -> DualTensor {
    let mut acc = DualTensor::unit();
    for (idx, &e) in m.exponents.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let base = generator_coproduct(idx as u32 + 1);
        // e-th power via binary expansion; squaring is termwise in char 2.
        let mut bit = 0;
        let mut rem = e;
        while rem != 0 {
            if rem & 1 == 1 {
                acc = acc.multiply(&base.power_2a(bit));
            }
            rem >>= 1;
            bit += 1;
        }
    }
    acc
}

/// All monomials of the given degree: partitions of `degree` into parts
/// 2^i - 1, largest z1-exponent first.
pub fn milnor_basis(degree: u32) -> Vec<DualMonomial> {
    fn rec(remaining: u32, gen: usize, exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let gen_degree = (1u32 << (gen + 1)) - 1;
        if gen_degree > remaining {
            if remaining == 0 {
                out.push(exps.clone());
            }
            return;
        }
        for e in 0..=remaining / gen_degree {
            let mut next = exps.clone();
            if gen >= next.len() {
                next.resize(gen + 1, 0);
            }
            next[gen] = e;
            rec(remaining - e * gen_degree, gen + 1, &mut next, out);
        }
    }
    let mut raw = Vec::new();
    if degree == 0 {
        raw.push(Vec::new());
    } else {
        rec(degree, 0, &mut Vec::new(), &mut raw);
    }
    let mut monos: Vec<DualMonomial> = raw.into_iter().map(DualMonomial::from_exponents).collect();
    monos.sort_by(|a, b| b.exponents.cmp(&a.exponents));
    monos.dedup();
    monos
}

/// All compositions of n into positive parts; used to enumerate every
/// Steenrod word of a given degree exhaustively.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for i in 1..=n {
            prefix.push(i);
            rec(n - i, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// The Hopf pairing between the admissible and Milnor bases, computed
/// recursively through the coproduct. Base case: <Sq^a, m> = 1 exactly
/// when m = z1^a.
pub fn pairing(x: &AdmissibleMonomial, m: &DualMonomial) -> bool {
    if x.degree() != m.degree() {
        return false;
    }
    pairing_word(x.exponents(), m, &mut HashMap::new())
}

fn pairing_word(
    word: &[u32],
    m: &DualMonomial,
    coproducts: &mut HashMap<DualMonomial, DualTensor>,
) -> bool {
    let Some((&a, rest)) = word.split_first() else {
        return m.is_one();
    };
    let left_target = DualMonomial::zeta1_power(a);
    let delta = coproducts
        .entry(m.clone())
        .or_insert_with(|| coproduct(m))
        .clone();
    let mut acc = false;
    for (l, r) in delta.support() {
        if *l == left_target {
            acc ^= pairing_word(rest, r, coproducts);
        }
    }
    acc
}

/// Reconstructs products in the Steenrod algebra purely from the dual side:
/// pair both factors through the coproduct, then solve for the admissible
/// element with those pairings. Independent of Adem reduction, so it serves
/// as an oracle for `multiply`.
pub struct DualityOracle {
    coproducts: HashMap<DualMonomial, DualTensor>,
    pairing_memo: HashMap<(Vec<u32>, DualMonomial), bool>,
    /// per degree: (admissible basis, milnor basis, pairing matrix rows)
    tables: HashMap<u32, (Vec<AdmissibleMonomial>, Vec<DualMonomial>, BitMatrix)>,
}

impl Default for DualityOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl DualityOracle {
    pub fn new() -> Self {
        DualityOracle {
            coproducts: HashMap::new(),
            pairing_memo: HashMap::new(),
            tables: HashMap::new(),
        }
    }

    fn coproduct_of(&mut self, m: &DualMonomial) -> DualTensor {
        self.coproducts
            .entry(m.clone())
            .or_insert_with(|| coproduct(m))
            .clone()
    }

    fn pair_word(&mut self, word: &[u32], m: &DualMonomial) -> bool {
        let Some((&a, rest)) = word.split_first() else {
            return m.is_one();
        };
        let key = (word.to_vec(), m.clone());
        if let Some(&v) = self.pairing_memo.get(&key) {
            return v;
        }
        let left_target = DualMonomial::zeta1_power(a);
        let delta = self.coproduct_of(m);
        let mut acc = false;
        for (l, r) in delta.support() {
            if *l == left_target {
                acc ^= self.pair_word(rest, r);
            }
        }
        self.pairing_memo.insert(key, acc);
        acc
    }

    fn pair_element(&mut self, x: &SteenrodElement, m: &DualMonomial) -> bool {
        if x.degree() != m.degree() {
            return false;
        }
        let mut acc = false;
        let monos: Vec<_> = x.support().cloned().collect();
        for mono in monos {
            acc ^= self.pair_word(mono.exponents(), m);
        }
        acc
    }

    fn table(&mut self, degree: u32) -> &(Vec<AdmissibleMonomial>, Vec<DualMonomial>, BitMatrix) {
        if !self.tables.contains_key(&degree) {
            let adm = super::admissible_basis(degree);
            let mil = milnor_basis(degree);
            assert_eq!(adm.len(), mil.len(), "basis cardinality mismatch in degree {degree}");
            let mut p = BitMatrix::zeros(adm.len(), mil.len());
            for (i, a) in adm.iter().enumerate() {
                for (j, m) in mil.iter().enumerate() {
                    let word = a.exponents().to_vec();
                    if self.pair_word(&word, m) {
                        p.set(i, j, true);
                    }
                }
            }
            self.tables.insert(degree, (adm, mil, p));
        }
        &self.tables[&degree]
    }

    /// The product x*y computed through the dual pairing.
    pub fn product(&mut self, x: &SteenrodElement, y: &SteenrodElement) -> SteenrodElement {
        let degree = x.degree() + y.degree();
        // Pairings of the product against every Milnor monomial.
        let milnor = self.table(degree).1.clone();
        let mut target = BitVec::zeros(milnor.len());
        for (j, m) in milnor.iter().enumerate() {
            let delta = self.coproduct_of(m);
            let mut acc = false;
            for (l, r) in delta.support() {
                if l.degree() == x.degree() {
                    acc ^= self.pair_element(x, l) & self.pair_element(y, r);
                }
            }
            if acc {
                target.set(j, true);
            }
        }
        let (adm, _, p) = self.table(degree);
        let coeffs = p
            .solve_in_span(&target)
            .expect("pairing matrix is invertible");
        let monos: Vec<AdmissibleMonomial> = coeffs.iter_set().map(|i| adm[i].clone()).collect();
        SteenrodElement::from_monomials(degree, monos)
    }
}

/// One-shot wrapper around [`DualityOracle::product`]. The bound guards the
/// probe range: both bases must be enumerable through the product degree.
pub fn dualized_product(
    x: &SteenrodElement,
    y: &SteenrodElement,
    probe_degree_bound: u32,
) -> SteenrodElement {
    assert!(
        x.degree() + y.degree() <= probe_degree_bound,
        "product degree exceeds probe bound"
    );
    DualityOracle::new().product(x, y)
}

impl fmt::Display for DualMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            write!(f, "z{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for DualTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, r) in &self.support {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{l} (x) {r}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for DualMonomial {
    type Err = ParseError;

    /// `z<i>^<e>` factors separated by `*`; `1` is the unit.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(DualMonomial::one());
        }
        let mut m = DualMonomial::one();
        for factor in s.split('*') {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix('z')
                .ok_or_else(|| ParseError::new(format!("expected z<i>[^<e>], got {factor:?}")))?;
            let (i_str, e) = match rest.split_once('^') {
                Some((i, e)) => (
                    i,
                    e.parse::<u32>()
                        .map_err(|_| ParseError::new(format!("bad exponent in {factor:?}")))?,
                ),
                None => (rest, 1),
            };
            let i: u32 = i_str
                .parse()
                .map_err(|_| ParseError::new(format!("bad index in {factor:?}")))?;
            if i == 0 {
                continue; // z0 = 1
            }
            let mut exps = vec![0; i as usize];
            exps[i as usize - 1] = e;
            m = m.multiply(&DualMonomial::from_exponents(exps));
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steenrod::multiply;

    #[test]
    fn milnor_basis_low_degrees() {
        assert_eq!(milnor_basis(0), vec![DualMonomial::one()]);
        assert_eq!(
            milnor_basis(3),
            vec![
                DualMonomial::zeta1_power(3),
                DualMonomial::zeta(2),
            ]
        );
        assert_eq!(
            milnor_basis(4),
            vec![
                DualMonomial::zeta1_power(4),
                DualMonomial::zeta(1).multiply(&DualMonomial::zeta(2)),
            ]
        );
    }

    #[test]
    fn coproduct_zeta1() {
        let mut expected = DualTensor::zero();
        expected.toggle(DualMonomial::zeta(1), DualMonomial::one());
        expected.toggle(DualMonomial::one(), DualMonomial::zeta(1));
        assert_eq!(coproduct(&DualMonomial::zeta(1)), expected);
    }

    #[test]
    fn coproduct_zeta2() {
        let mut expected = DualTensor::zero();
        expected.toggle(DualMonomial::zeta(2), DualMonomial::one());
        expected.toggle(DualMonomial::zeta1_power(2), DualMonomial::zeta(1));
        expected.toggle(DualMonomial::one(), DualMonomial::zeta(2));
        assert_eq!(coproduct(&DualMonomial::zeta(2)), expected);
    }

    #[test]
    fn coproduct_unit() {
        assert_eq!(coproduct(&DualMonomial::one()), DualTensor::unit());
    }

    #[test]
    fn pairing_base_cases() {
        let sq1 = AdmissibleMonomial::single(1);
        assert!(pairing(&sq1, &DualMonomial::zeta(1)));
        let sq3 = AdmissibleMonomial::single(3);
        assert!(!pairing(&sq3, &DualMonomial::zeta(2)));
        let sq2sq1 = AdmissibleMonomial::new(vec![2, 1]);
        assert!(pairing(&sq2sq1, &DualMonomial::zeta(2)));
    }

    #[test]
    fn dualized_product_matches_examples() {
        let sq1 = SteenrodElement::from_monomial(AdmissibleMonomial::single(1));
        assert!(dualized_product(&sq1, &sq1, 16).is_zero());

        let sq2 = SteenrodElement::from_monomial(AdmissibleMonomial::single(2));
        assert_eq!(
            dualized_product(&sq2, &sq2, 16),
            SteenrodElement::from_monomial(AdmissibleMonomial::new(vec![3, 1]))
        );

        let sq3 = SteenrodElement::from_monomial(AdmissibleMonomial::single(3));
        assert_eq!(dualized_product(&SteenrodElement::one(), &sq3, 16), sq3);
    }

    #[test]
    fn oracle_agrees_with_multiply_in_low_degrees() {
        let mut oracle = DualityOracle::new();
        for d1 in 0..=5u32 {
            for d2 in 0..=5u32 {
                for a in crate::steenrod::admissible_basis(d1) {
                    for b in crate::steenrod::admissible_basis(d2) {
                        let x = SteenrodElement::from_monomial(a.clone());
                        let y = SteenrodElement::from_monomial(b.clone());
                        assert_eq!(multiply(&x, &y), oracle.product(&x, &y), "{a} * {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn basis_cardinalities_agree() {
        for d in 0..=24u32 {
            assert_eq!(
                crate::steenrod::admissible_basis(d).len(),
                milnor_basis(d).len(),
                "degree {d}"
            );
        }
    }

    #[test]
    fn parse_dual_monomial() {
        assert_eq!("z2".parse::<DualMonomial>().unwrap(), DualMonomial::zeta(2));
        assert_eq!(
            "z1^2*z2".parse::<DualMonomial>().unwrap(),
            DualMonomial::from_exponents(vec![2, 1])
        );
        assert!("w3".parse::<DualMonomial>().is_err());
    }
}
