//! Signs and plain permutations of `0..n`, stored as image vectors
//! (`p[i]` is the image of `i`).

use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

use serde::{Deserialize, Serialize};

/// An element of the multiplicative group {+1, -1}.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Minus,
    #[default]
    Plus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    /// `(-1)^n`
    pub fn parity(n: usize) -> Sign {
        if n.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl std::iter::Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Plus, Mul::mul)
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value()
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> Result<Sign, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("{other} is not a sign")),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Disjoint cycles of `p`, each starting at its smallest element, ordered
/// by that element. Fixed points are included as 1-cycles.
pub fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = p[i];
        }
        out.push(cycle);
    }
    out
}

/// Parity of `p` as `(-1)^(n - #cycles)`.
pub fn permutation_sign(p: &[usize]) -> Sign {
    debug_assert!(is_permutation(p));
    Sign::parity(p.len() - cycles(p).len())
}

/// `(a ∘ b)(i) = a(b(i))`
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

pub fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Cycle notation without fixed points, e.g. `(0 1 2)(3 4)`; the identity is `()`.
pub fn cycle_notation(p: &[usize]) -> String {
    let parts: Vec<String> = cycles(p)
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            let inner: Vec<String> = c.iter().map(ToString::to_string).collect();
            format!("({})", inner.join(" "))
        })
        .collect();
    if parts.is_empty() {
        "()".to_string()
    } else {
        parts.concat()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sign_examples() {
        assert_eq!(permutation_sign(&identity(5)), Sign::Plus);
        assert_eq!(permutation_sign(&[1, 0, 2]), Sign::Minus);
        assert_eq!(permutation_sign(&[1, 2, 0]), Sign::Plus);
        assert_eq!(permutation_sign(&[]), Sign::Plus);
    }

    #[test]
    fn notation() {
        assert_eq!(cycle_notation(&[0, 1, 2]), "()");
        assert_eq!(cycle_notation(&[1, 2, 0, 4, 3]), "(0 1 2)(3 4)");
    }

    #[test]
    fn sign_serde_as_integer() {
        assert_eq!(serde_json::to_string(&Sign::Minus).unwrap(), "-1");
        let s: Sign = serde_json::from_str("1").unwrap();
        assert_eq!(s, Sign::Plus);
        assert!(serde_json::from_str::<Sign>("0").is_err());
    }

    fn arb_perm(max: usize) -> impl Strategy<Value = Vec<usize>> {
        (0..=max).prop_flat_map(|n| Just(identity(n)).prop_shuffle())
    }

    // Parity by counting inversions, independent of the cycle route.
    fn inversion_sign(p: &[usize]) -> Sign {
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        Sign::parity(inv)
    }

    proptest! {
        #[test]
        fn sign_matches_inversions(p in arb_perm(9)) {
            prop_assert_eq!(permutation_sign(&p), inversion_sign(&p));
        }

        #[test]
        fn sign_is_multiplicative((a, b) in (0usize..8).prop_flat_map(|n| {
            (Just(identity(n)).prop_shuffle(), Just(identity(n)).prop_shuffle())
        })) {
            let ab = compose(&a, &b);
            prop_assert_eq!(permutation_sign(&ab), permutation_sign(&a) * permutation_sign(&b));
            prop_assert_eq!(compose(&a, &invert(&a)), identity(a.len()));
        }
    }
}
