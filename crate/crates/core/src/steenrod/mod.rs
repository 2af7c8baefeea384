//! Exact arithmetic in the mod-2 Steenrod algebra: admissible basis with
//! Adem reduction on one side, Milnor monomial basis with the coproduct on
//! the dual side, and the Hopf pairing connecting the two.

mod adem;
mod dual;

pub use adem::{adem_reduce, adem_reduce_with, ReductionStrategy};
pub use dual::{
    compositions, coproduct, dualized_product, milnor_basis, pairing, DualMonomial, DualTensor,
    DualityOracle,
};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

/// A word Sq^{i1} ... Sq^{in} in the Steenrod squares, not necessarily
/// admissible. The empty word is Sq^0 = 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SqWord(pub Vec<u32>);

impl SqWord {
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(exponents.iter().all(|&i| i >= 1), "exponents must be >= 1");
        SqWord(exponents)
    }

    pub fn one() -> Self {
        SqWord(Vec::new())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// An admissible monomial: exponents satisfy i_j >= 2 i_{j+1}.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AdmissibleMonomial {
    exponents: Vec<u32>,
}

impl AdmissibleMonomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(is_admissible(&exponents), "not admissible: {exponents:?}");
        AdmissibleMonomial { exponents }
    }

    pub fn one() -> Self {
        AdmissibleMonomial {
            exponents: Vec::new(),
        }
    }

    pub fn single(i: u32) -> Self {
        assert!(i >= 1);
        AdmissibleMonomial { exponents: vec![i] }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn word(&self) -> SqWord {
        SqWord(self.exponents.clone())
    }
}

pub fn is_admissible(exponents: &[u32]) -> bool {
    exponents.iter().all(|&i| i >= 1)
        && exponents.windows(2).all(|w| w[0] >= 2 * w[1])
}

/// A homogeneous element of the Steenrod algebra in the admissible basis.
/// Presence in the support set means coefficient 1 over GF(2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SteenrodElement {
    degree: u32,
    support: BTreeSet<AdmissibleMonomial>,
}

impl SteenrodElement {
    pub fn zero(degree: u32) -> Self {
        SteenrodElement {
            degree,
            support: BTreeSet::new(),
        }
    }

    pub fn one() -> Self {
        SteenrodElement::from_monomial(AdmissibleMonomial::one())
    }

    pub fn from_monomial(m: AdmissibleMonomial) -> Self {
        let degree = m.degree();
        let mut support = BTreeSet::new();
        support.insert(m);
        SteenrodElement { degree, support }
    }

    pub fn from_monomials(degree: u32, monomials: impl IntoIterator<Item = AdmissibleMonomial>) -> Self {
        let mut e = SteenrodElement::zero(degree);
        for m in monomials {
            e.toggle(m);
        }
        e
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &AdmissibleMonomial> {
        self.support.iter()
    }

    pub fn contains(&self, m: &AdmissibleMonomial) -> bool {
        self.support.contains(m)
    }

    /// XOR a monomial into the support (GF(2) addition).
    pub fn toggle(&mut self, m: AdmissibleMonomial) {
        assert_eq!(m.degree(), self.degree, "degree mismatch");
        if !self.support.remove(&m) {
            self.support.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &SteenrodElement) {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        for m in &other.support {
            self.toggle(m.clone());
        }
    }
}

/// Product in the Steenrod algebra: concatenate and Adem-reduce.
pub fn multiply(x: &SteenrodElement, y: &SteenrodElement) -> SteenrodElement {
    let mut out = SteenrodElement::zero(x.degree() + y.degree());
    for a in x.support() {
        for b in y.support() {
            let mut word = a.exponents.clone();
            word.extend_from_slice(&b.exponents);
            out.add_assign(&adem_reduce(&SqWord(word)));
        }
    }
    out
}

/// All admissible monomials of the given degree, largest leading exponent
/// first. This ordering is the basis order used by every matrix and chart.
pub fn admissible_basis(degree: u32) -> Vec<AdmissibleMonomial> {
    fn rec(degree: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if degree == 0 {
            out.push(prefix.clone());
            return;
        }
        for i in (1..=degree.min(cap)).rev() {
            prefix.push(i);
            rec(degree - i, i / 2, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(degree, degree, &mut Vec::new(), &mut raw);
    raw.sort_by(|a, b| b.cmp(a));
    raw.into_iter().map(AdmissibleMonomial::new).collect()
}

impl fmt::Display for AdmissibleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in &self.exponents {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "Sq{i}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Display for SteenrodElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for m in &self.support {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for SqWord {
    type Err = ParseError;

    /// Whitespace-separated `Sq<n>` tokens; the empty string is the unit.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut exps = Vec::new();
        for tok in s.split_whitespace() {
            let n = tok
                .strip_prefix("Sq")
                .and_then(|r| r.parse::<u32>().ok())
                .ok_or_else(|| ParseError::new(format!("expected Sq<n>, got {tok:?}")))?;
            if n == 0 {
                continue; // Sq0 = 1
            }
            exps.push(n);
        }
        Ok(SqWord(exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_law() {
        let sq2 = SteenrodElement::from_monomial(AdmissibleMonomial::single(2));
        assert_eq!(multiply(&SteenrodElement::one(), &sq2), sq2);
        assert_eq!(multiply(&sq2, &SteenrodElement::one()), sq2);
    }

    #[test]
    fn sq1_squared_is_zero() {
        let sq1 = SteenrodElement::from_monomial(AdmissibleMonomial::single(1));
        assert!(multiply(&sq1, &sq1).is_zero());
    }

    #[test]
    fn sq2_squared() {
        let sq2 = SteenrodElement::from_monomial(AdmissibleMonomial::single(2));
        let expected = SteenrodElement::from_monomial(AdmissibleMonomial::new(vec![3, 1]));
        assert_eq!(multiply(&sq2, &sq2), expected);
    }

    #[test]
    fn basis_degree_0_and_1() {
        assert_eq!(admissible_basis(0), vec![AdmissibleMonomial::one()]);
        assert_eq!(admissible_basis(1), vec![AdmissibleMonomial::single(1)]);
    }

    #[test]
    fn basis_degree_3() {
        let b = admissible_basis(3);
        assert_eq!(
            b,
            vec![
                AdmissibleMonomial::single(3),
                AdmissibleMonomial::new(vec![2, 1])
            ]
        );
    }

    #[test]
    fn parse_sq_word() {
        assert_eq!("Sq3 Sq2".parse::<SqWord>().unwrap(), SqWord(vec![3, 2]));
        assert_eq!("".parse::<SqWord>().unwrap(), SqWord::one());
        assert!("Sqx".parse::<SqWord>().is_err());
    }
}
