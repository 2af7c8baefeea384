use super::{is_admissible, SqWord, SteenrodElement};

/// Which inadmissible pair to rewrite next. Both strategies reach the same
/// normal form; keeping both lets the confluence property be tested rather
/// than assumed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReductionStrategy {
    LeftmostPair,
    RightmostPair,
}

/// Binomial coefficient mod 2 by Lucas' theorem: C(n, k) is odd exactly
/// when k is a bitwise submask of n.
pub(crate) fn binomial_odd(n: u32, k: u32) -> bool {
    k <= n && (k & n) == k
}

/// Rewrite a word into the unique GF(2)-combination of admissible monomials,
/// using the Adem relation
/// Sq^a Sq^b = sum_c C(b-c-1, a-2c) Sq^{a+b-c} Sq^c  (a < 2b).
/// Terms with c beyond floor(a/2) vanish by the binomial convention, so the
/// sum iterates while a - 2c >= 0.
pub fn adem_reduce(word: &SqWord) -> SteenrodElement {
    adem_reduce_with(word, ReductionStrategy::LeftmostPair)
}

pub fn adem_reduce_with(word: &SqWord, strategy: ReductionStrategy) -> SteenrodElement {
    let degree = word.degree();
    let mut result = SteenrodElement::zero(degree);
    let mut stack: Vec<Vec<u32>> = vec![word.0.clone()];
    while let Some(w) = stack.pop() {
        let inadmissible = |j: &usize| w[*j] < 2 * w[*j + 1];
        let pos = match strategy {
            ReductionStrategy::LeftmostPair => (0..w.len().saturating_sub(1)).find(inadmissible),
            ReductionStrategy::RightmostPair => {
                (0..w.len().saturating_sub(1)).rev().find(inadmissible)
            }
        };
        let Some(j) = pos else {
            result.toggle(super::AdmissibleMonomial::new(w));
            continue;
        };
        let (a, b) = (w[j], w[j + 1]);
        let mut c = 0;
        while 2 * c <= a {
            // b - c - 1 >= 0 here since c <= a/2 < b.
            if binomial_odd(b - c - 1, a - 2 * c) {
                let mut next = Vec::with_capacity(w.len());
                next.extend_from_slice(&w[..j]);
                next.push(a + b - c);
                if c > 0 {
                    next.push(c);
                }
                next.extend_from_slice(&w[j + 2..]);
                stack.push(next);
            }
            c += 1;
        }
    }
    debug_assert!(result.support().all(|m| is_admissible(m.exponents())));
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steenrod::AdmissibleMonomial;

    fn reduce(exps: &[u32]) -> SteenrodElement {
        adem_reduce(&SqWord(exps.to_vec()))
    }

    #[test]
    fn sq1_sq1_vanishes() {
        // a = b = 1: the single binomial C(0, 1) is zero.
        assert!(reduce(&[1, 1]).is_zero());
    }

    #[test]
    fn sq1_sq2() {
        // a = 1, b = 2: only c = 0 survives with C(1, 1) = 1.
        assert_eq!(
            reduce(&[1, 2]),
            SteenrodElement::from_monomial(AdmissibleMonomial::single(3))
        );
    }

    #[test]
    fn sq2_sq2() {
        // c = 0 gives C(1, 2) = 0, c = 1 gives C(0, 0) = 1.
        assert_eq!(
            reduce(&[2, 2]),
            SteenrodElement::from_monomial(AdmissibleMonomial::new(vec![3, 1]))
        );
    }

    #[test]
    fn sq3_sq2_vanishes() {
        assert!(reduce(&[3, 2]).is_zero());
    }

    #[test]
    fn sq2_sq3() {
        let mut expected = SteenrodElement::zero(5);
        expected.toggle(AdmissibleMonomial::single(5));
        expected.toggle(AdmissibleMonomial::new(vec![4, 1]));
        assert_eq!(reduce(&[2, 3]), expected);
    }

    #[test]
    fn admissible_word_is_fixed() {
        let e = reduce(&[4, 2, 1]);
        assert_eq!(
            e,
            SteenrodElement::from_monomial(AdmissibleMonomial::new(vec![4, 2, 1]))
        );
    }

    #[test]
    fn strategies_agree_on_small_words() {
        // exhaustive over all compositions of each degree up to 10
        for degree in 1u32..=10 {
            for word in crate::steenrod::dual::compositions(degree) {
                let word = SqWord(word);
                assert_eq!(
                    adem_reduce_with(&word, ReductionStrategy::LeftmostPair),
                    adem_reduce_with(&word, ReductionStrategy::RightmostPair),
                    "confluence failed on {word:?}"
                );
            }
        }
    }
}
