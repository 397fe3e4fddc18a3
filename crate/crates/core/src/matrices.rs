//! Exact 2×2 integer matrices and the homomorphism μ from {x,y}* into
//! SL₂(ℤ) given by μx = [[2,1],[1,1]], μy = [[5,2],[2,1]].

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::words::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    e11: BigInt,
    e12: BigInt,
    e21: BigInt,
    e22: BigInt,
}

impl Mat2 {
    pub fn new(
        e11: impl Into<BigInt>,
        e12: impl Into<BigInt>,
        e21: impl Into<BigInt>,
        e22: impl Into<BigInt>,
    ) -> Self {
        Mat2 { e11: e11.into(), e12: e12.into(), e21: e21.into(), e22: e22.into() }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn e11(&self) -> &BigInt {
        &self.e11
    }

    pub fn e12(&self) -> &BigInt {
        &self.e12
    }

    pub fn e21(&self) -> &BigInt {
        &self.e21
    }

    pub fn e22(&self) -> &BigInt {
        &self.e22
    }

    /// Row-major entries.
    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.e11, &self.e12, &self.e21, &self.e22]
    }

    pub fn determinant(&self) -> BigInt {
        &self.e11 * &self.e22 - &self.e12 * &self.e21
    }

    pub fn trace(&self) -> BigInt {
        &self.e11 + &self.e22
    }

    /// Adjugate divided by the determinant; only ±1 keeps it integral.
    pub fn inverse(&self) -> Result<Mat2> {
        let det = self.determinant();
        if det.abs() != BigInt::one() {
            return Err(Error::NotUnimodular(det));
        }
        let adj = Mat2 {
            e11: self.e22.clone(),
            e12: -&self.e12,
            e21: -&self.e21,
            e22: self.e11.clone(),
        };
        Ok(if det.is_negative() { adj.negated() } else { adj })
    }

    fn negated(self) -> Mat2 {
        Mat2 { e11: -self.e11, e12: -self.e12, e21: -self.e21, e22: -self.e22 }
    }

    pub fn all_positive(&self) -> bool {
        self.entries().iter().all(|e| e.is_positive())
    }

    /// Every entry of `self` is strictly smaller than the matching entry of
    /// `other`.
    pub fn entrywise_less(&self, other: &Mat2) -> bool {
        self.entries().iter().zip(other.entries()).all(|(a, b)| *a < b)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            e11: &self.e11 * &rhs.e11 + &self.e12 * &rhs.e21,
            e12: &self.e11 * &rhs.e12 + &self.e12 * &rhs.e22,
            e21: &self.e21 * &rhs.e11 + &self.e22 * &rhs.e21,
            e22: &self.e21 * &rhs.e12 + &self.e22 * &rhs.e22,
        }
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

/// `[[e11,e12],[e21,e22]]`
impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.e11, self.e12, self.e21, self.e22)
    }
}

impl FromStr for Mat2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse { what: "matrix", input: s.to_string() };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("[[")
            .and_then(|r| r.strip_suffix("]]"))
            .ok_or_else(err)?;
        let (row1, row2) = inner.split_once("],[").ok_or_else(err)?;
        let mut entries = row1.split(',').chain(row2.split(','));
        let mut next = || -> Result<BigInt> { entries.next().ok_or_else(err)?.parse().map_err(|_| err()) };
        let m = Mat2::new(next()?, next()?, next()?, next()?);
        if entries.next().is_some() {
            return Err(err());
        }
        Ok(m)
    }
}

pub fn mu_x() -> Mat2 {
    Mat2::new(2, 1, 1, 1)
}

pub fn mu_y() -> Mat2 {
    Mat2::new(5, 2, 2, 1)
}

pub fn mu_letter(letter: Letter) -> Mat2 {
    match letter {
        Letter::X => mu_x(),
        Letter::Y => mu_y(),
    }
}

/// Product of the generator images in word order; the empty word maps to the
/// identity.
pub fn mu(word: &Word) -> Mat2 {
    let (mx, my) = (mu_x(), mu_y());
    word.letters().iter().fold(Mat2::identity(), |acc, &l| {
        &acc * match l {
            Letter::X => &mx,
            Letter::Y => &my,
        }
    })
}

pub fn trace(m: &Mat2) -> BigInt {
    m.trace()
}

pub fn inverse(m: &Mat2) -> Result<Mat2> {
    m.inverse()
}

/// `a·b·a⁻¹·b⁻¹`
pub fn commutator(a: &Mat2, b: &Mat2) -> Result<Mat2> {
    let (ai, bi) = (a.inverse()?, b.inverse()?);
    Ok(&(&(a * b) * &ai) * &bi)
}

pub fn commutator_trace(a: &Mat2, b: &Mat2) -> Result<BigInt> {
    Ok(commutator(a, b)?.trace())
}

/// Tr(A)² + Tr(B)² + Tr(AB)² − (Tr(ABA⁻¹B⁻¹) + 2 + Tr(A)Tr(B)Tr(AB)),
/// which vanishes on SL₂.
pub fn fricke_residual(a: &Mat2, b: &Mat2) -> Result<BigInt> {
    let (ta, tb, tab) = (a.trace(), b.trace(), (a * b).trace());
    let lhs = &ta * &ta + &tb * &tb + &tab * &tab;
    let rhs = commutator_trace(a, b)? + 2 + &ta * &tb * &tab;
    Ok(lhs - rhs)
}

/// Residuals of Tr(A²B) + Tr(B) = Tr(A)Tr(AB) and
/// Tr(AB²) + Tr(A) = Tr(AB)Tr(B).
pub fn power_trace_residuals(a: &Mat2, b: &Mat2) -> (BigInt, BigInt) {
    let ab = a * b;
    let (ta, tb, tab) = (a.trace(), b.trace(), ab.trace());
    let aab = (a * &ab).trace();
    let abb = (&ab * b).trace();
    (aab + &tb - &ta * &tab, abb + &ta - &tab * &tb)
}

/// ⅓Tr(m), checked against the (1,2) entry. For μ-images of Christoffel
/// words the two agree; anything else is reported as an invariant failure.
pub fn markoff_number_of(m: &Mat2) -> Result<BigUint> {
    let (third, rem) = m.trace().div_rem(&BigInt::from(3));
    if !rem.is_zero() {
        return Err(Error::Invariant(format!("trace of {m} is not divisible by 3")));
    }
    if third != m.e12 {
        return Err(Error::Invariant(format!("trace/3 = {third} differs from e12 of {m}")));
    }
    match third.into_parts() {
        (Sign::Plus, n) => Ok(n),
        _ => Err(Error::Invariant(format!("non-positive Markoff number from {m}"))),
    }
}

/// ⅓Tr(μ(word)).
pub fn markoff_number(word: &Word) -> Result<BigUint> {
    markoff_number_of(&mu(word)).map_err(|e| match e {
        Error::Invariant(msg) => Error::Invariant(format!("{word}: {msg}")),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn generator_images() {
        assert_eq!(mu(&w("x")), Mat2::new(2, 1, 1, 1));
        assert_eq!(mu(&w("y")), Mat2::new(5, 2, 2, 1));
        assert_eq!(mu(&Word::empty()), Mat2::identity());
        assert_eq!(mu(&w("xy")), Mat2::new(12, 5, 7, 3));
        assert_eq!(mu(&w("xxy")), Mat2::new(31, 13, 19, 8));
        assert_eq!(mu(&w("xyy")), Mat2::new(70, 29, 41, 17));
    }

    #[test]
    fn traces() {
        assert_eq!(trace(&mu_x()), BigInt::from(3));
        assert_eq!(trace(&Mat2::identity()), BigInt::from(2));
        assert_eq!(trace(&Mat2::new(12, 5, 7, 3)), BigInt::from(15));
    }

    #[test]
    fn inverses() {
        assert_eq!(inverse(&mu_x()).unwrap(), Mat2::new(1, -1, -1, 2));
        assert_eq!(inverse(&Mat2::identity()).unwrap(), Mat2::identity());
        let yi = inverse(&mu_y()).unwrap();
        assert_eq!(yi, Mat2::new(1, -2, -2, 5));
        assert_eq!(&mu_y() * &yi, Mat2::identity());
        // det −1
        let m = Mat2::new(0, 1, 1, 0);
        assert_eq!(&m * &m.inverse().unwrap(), Mat2::identity());
    }

    #[test]
    fn inverse_needs_unit_determinant() {
        assert_eq!(inverse(&Mat2::new(2, 0, 0, 1)), Err(Error::NotUnimodular(BigInt::from(2))));
        assert!(commutator_trace(&Mat2::new(2, 0, 0, 2), &mu_x()).is_err());
        assert!(fricke_residual(&mu_x(), &Mat2::new(0, 0, 0, 0)).is_err());
    }

    #[test]
    fn generator_commutator() {
        let c = commutator(&mu_x(), &mu_y()).unwrap();
        assert_eq!(c, Mat2::new(11, -24, 6, -13));
        assert_eq!(c.determinant(), BigInt::one());
        assert_eq!(c.trace(), BigInt::from(-2));
        // The often-quoted [[11,-24],[-6,-13]] has the right trace but
        // determinant -287, so it is not in SL2(Z).
        assert_eq!(Mat2::new(11, -24, -6, -13).determinant(), BigInt::from(-287));
        assert_eq!(commutator_trace(&Mat2::identity(), &mu(&w("xxy"))).unwrap(), BigInt::from(2));
        let fig = commutator_trace(&mu(&w("xxxyxxy")), &mu(&w("xxy"))).unwrap();
        assert_eq!(fig, BigInt::from(-2));
    }

    #[test]
    fn trace_identities_on_small_inputs() {
        assert_eq!(fricke_residual(&mu_x(), &mu_y()).unwrap(), BigInt::zero());
        assert_eq!(fricke_residual(&Mat2::identity(), &Mat2::identity()).unwrap(), BigInt::zero());
        let zero = (BigInt::zero(), BigInt::zero());
        assert_eq!(power_trace_residuals(&mu_x(), &mu_y()), zero);
        assert_eq!(power_trace_residuals(&Mat2::identity(), &Mat2::identity()), zero);
    }

    #[test]
    fn markoff_numbers_of_short_words() {
        let n = |s| markoff_number(&w(s)).unwrap();
        assert_eq!(n("x"), BigUint::from(1u32));
        assert_eq!(n("y"), BigUint::from(2u32));
        assert_eq!(n("xy"), BigUint::from(5u32));
        assert_eq!(n("xxy"), BigUint::from(13u32));
        assert_eq!(n("xyy"), BigUint::from(29u32));
    }

    #[test]
    fn markoff_number_flags_non_christoffel_words() {
        // μ(xx) has trace 7
        assert!(markoff_number(&w("xx")).unwrap_err().is_invariant_violation());
        // μ(yx) = [[12,7],[5,3]]: trace 15 but e12 = 7
        assert!(markoff_number(&w("yx")).unwrap_err().is_invariant_violation());
        assert!(markoff_number(&Word::empty()).is_err());
    }

    #[test]
    fn matrix_text_form() {
        let m = Mat2::new(11, -24, -6, -13);
        assert_eq!(m.to_string(), "[[11,-24],[-6,-13]]");
        assert_eq!("[[11, -24], [-6, -13]]".parse::<Mat2>().unwrap(), m);
        assert!("[[1,2],[3]]".parse::<Mat2>().is_err());
        assert!("[[1,2],[3,4,5]]".parse::<Mat2>().is_err());
        assert!("[1,2,3,4]".parse::<Mat2>().is_err());
    }
}
