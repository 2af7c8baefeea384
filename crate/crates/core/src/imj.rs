//! Closed-form v1-periodic summands of the stable stems at every prime:
//! an 8-fold periodic pattern at p = 2 and a one-line congruence criterion
//! at odd primes.

use std::fmt;

use crate::error::ImjError;

/// A finite abelian group as a multiset of prime-power cyclic orders.
/// Display follows the dot notation where `16.9.5.7.13` means
/// Z/16 + Z/9 + Z/5 + Z/7 + Z/13 and repeated factors compress to powers
/// (`2^2` for Z/2 + Z/2).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupDescriptor {
    factors: Vec<u64>,
}

impl GroupDescriptor {
    pub fn trivial() -> Self {
        GroupDescriptor::default()
    }

    pub fn cyclic(n: u64) -> Self {
        GroupDescriptor::new(vec![n])
    }

    pub fn new(factors: Vec<u64>) -> Self {
        for &f in &factors {
            assert!(is_prime_power(f), "{f} is not a prime power >= 2");
        }
        GroupDescriptor { factors }
    }

    /// Factors in the stored (display) order.
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn order(&self) -> u128 {
        self.factors.iter().map(|&f| f as u128).product()
    }

    /// The factors as a canonical (sorted) multiset.
    pub fn multiset(&self) -> Vec<u64> {
        let mut m = self.factors.clone();
        m.sort_unstable();
        m
    }

    /// Multiset equality: summand order does not matter.
    pub fn same_group(&self, other: &GroupDescriptor) -> bool {
        self.multiset() == other.multiset()
    }

    pub fn concat(&self, other: &GroupDescriptor) -> GroupDescriptor {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        GroupDescriptor { factors }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        // run-length encode consecutive equal factors as n^j
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.factors.len() {
            let n = self.factors[i];
            let mut j = 1;
            while i + j < self.factors.len() && self.factors[i + j] == n {
                j += 1;
            }
            if j == 1 {
                parts.push(n.to_string());
            } else {
                parts.push(format!("{n}^{j}"));
            }
            i += j;
        }
        write!(f, "{}", parts.join("."))
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut m = n;
            while m % d == 0 {
                m /= d;
            }
            return m == 1;
        }
        d += 1;
    }
    true // n itself is prime
}

/// The 2-part of k: the largest power of 2 dividing it.
pub fn nu(k: u64) -> Result<u64, ImjError> {
    if k == 0 {
        return Err(ImjError::BadStem(0));
    }
    Ok(1 << k.trailing_zeros())
}

/// The p-part of a for an odd prime p.
pub fn nu_p(p: u64, a: u64) -> Result<u64, ImjError> {
    if p == 2 || !is_prime(p) {
        return Err(ImjError::NotPrime(p));
    }
    if a == 0 {
        return Err(ImjError::BadStem(0));
    }
    let mut part = 1;
    let mut m = a;
    while m % p == 0 {
        part *= p;
        m /= p;
    }
    Ok(part)
}

/// The v1-periodic summand of the k-th stable stem at the prime p.
///
/// At p = 2 the answer depends on k mod 8 (k = 1 is a special case outside
/// the 8-fold pattern: the formula for 1 mod 8 would give (Z/2)^2, the true
/// group is Z/2). At odd p the group is trivial unless 2(p-1) divides k+1,
/// and is then cyclic of order p * nu_p(a) where k+1 = 2(p-1)a.
pub fn v1_periodic(p: u64, k: u64) -> Result<GroupDescriptor, ImjError> {
    if k == 0 {
        return Err(ImjError::BadStem(0));
    }
    if p == 2 {
        if k == 1 {
            return Ok(GroupDescriptor::cyclic(2));
        }
        return Ok(match k % 8 {
            0 | 2 => GroupDescriptor::cyclic(2),
            1 => GroupDescriptor::new(vec![2, 2]),
            3 => GroupDescriptor::cyclic(8),
            7 => GroupDescriptor::cyclic(2 * nu(k + 1)?),
            _ => GroupDescriptor::trivial(), // 4, 5, 6 mod 8
        });
    }
    if !is_prime(p) {
        return Err(ImjError::NotPrime(p));
    }
    let period = 2 * (p - 1);
    if (k + 1) % period != 0 {
        return Ok(GroupDescriptor::trivial());
    }
    let a = (k + 1) / period;
    Ok(GroupDescriptor::cyclic(p * nu_p(p, a)?))
}

/// The full v1-periodic group in stem k: contributions over every prime.
/// An odd prime contributes only when 2(p-1) divides k+1, so p <= (k+3)/2.
pub fn v1_periodic_all(k: u64) -> Result<GroupDescriptor, ImjError> {
    let mut out = v1_periodic(2, k)?;
    for p in 3..=(k + 3) / 2 {
        if is_prime(p) {
            out = out.concat(&v1_periodic(p, k)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_examples() {
        assert_eq!(nu(8).unwrap(), 8);
        assert_eq!(nu(24).unwrap(), 8);
        assert_eq!(nu(7).unwrap(), 1);
        assert!(nu(0).is_err());
    }

    #[test]
    fn nu_p_examples() {
        assert_eq!(nu_p(3, 6).unwrap(), 3);
        assert_eq!(nu_p(3, 2).unwrap(), 1);
        assert_eq!(nu_p(5, 25).unwrap(), 25);
        assert!(nu_p(2, 4).is_err());
        assert!(nu_p(9, 4).is_err());
    }

    #[test]
    fn v1_periodic_examples() {
        assert!(v1_periodic(2, 23).unwrap().same_group(&GroupDescriptor::cyclic(16)));
        assert!(v1_periodic(2, 4).unwrap().is_trivial());
        assert!(v1_periodic(3, 11).unwrap().same_group(&GroupDescriptor::cyclic(9)));
        assert!(v1_periodic(5, 7).unwrap().same_group(&GroupDescriptor::cyclic(5)));
        assert!(v1_periodic(3, 5).unwrap().is_trivial());
        assert!(v1_periodic(2, 1).unwrap().same_group(&GroupDescriptor::cyclic(2)));
    }

    #[test]
    fn v1_periodic_all_examples() {
        assert!(v1_periodic_all(11)
            .unwrap()
            .same_group(&GroupDescriptor::new(vec![8, 9, 7])));
        assert!(v1_periodic_all(23)
            .unwrap()
            .same_group(&GroupDescriptor::new(vec![16, 9, 5, 7, 13])));
        assert!(v1_periodic_all(61).unwrap().is_trivial());
    }

    #[test]
    fn eightfold_periodicity_away_from_seven() {
        for k in 2..=82u64 {
            if k % 8 == 7 {
                continue;
            }
            assert!(
                v1_periodic(2, k).unwrap().same_group(&v1_periodic(2, k + 8).unwrap()),
                "k = {k}"
            );
        }
    }

    #[test]
    fn odd_primes_vanish_off_the_congruence() {
        for k in 1..=60u64 {
            for p in [3u64, 5, 7, 11] {
                if (k + 1) % (2 * (p - 1)) != 0 {
                    assert!(v1_periodic(p, k).unwrap().is_trivial(), "p={p}, k={k}");
                }
            }
        }
    }

    #[test]
    fn factors_are_p_local() {
        for k in 1..=90u64 {
            for p in [2u64, 3, 5, 7, 11, 13] {
                for &f in v1_periodic(p, k).unwrap().factors() {
                    let mut m = f;
                    while m % p == 0 {
                        m /= p;
                    }
                    assert_eq!(m, 1, "factor {f} at p={p}, k={k}");
                }
            }
        }
    }

    #[test]
    fn display_dot_notation() {
        assert_eq!(GroupDescriptor::new(vec![16, 9, 5, 7, 13]).to_string(), "16.9.5.7.13");
        assert_eq!(GroupDescriptor::new(vec![2, 2]).to_string(), "2^2");
        assert_eq!(GroupDescriptor::trivial().to_string(), "0");
        assert_eq!(GroupDescriptor::new(vec![2, 2, 8]).to_string(), "2^2.8");
    }
}
