//! Coefficient fields.
//!
//! Every algebraic container in the crate is generic over [`Coeff`]. The
//! exact default is the Gaussian rationals ℚ(i), aliased as [`Scalar`].

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{BigRational, Complex, Signed};
pub use num::{One, Zero};

/// Exact Gaussian rational.
pub type Scalar = Complex<BigRational>;
/// Exact rational.
pub type Rational = BigRational;

/// A field with a conjugation, usable as a coefficient ring.
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Complex conjugate.
    fn conj(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;
    /// Embeds the rational `num/den`; `den != 0`.
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Embeds a Gaussian rational.
    fn from_scalar(s: &Scalar) -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_ratio(v, 1)
    }
    /// True iff arithmetic is exact, so that `is_zero` is a proof.
    fn is_exact() -> bool;
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl Coeff for Scalar {
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Complex::new(self.re.recip(), BigRational::zero()));
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Complex::new(&self.re / &norm, -(&self.im / &norm)))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Complex::new(ratio(num, den), BigRational::zero())
    }
    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
    fn is_exact() -> bool {
        true
    }
}

/// Real rationals, used when all data is real.
impl Coeff for Rational {
    fn conj(&self) -> Self {
        self.clone()
    }
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        ratio(num, den)
    }
    /// Real part.
    fn from_scalar(s: &Scalar) -> Self {
        s.re.clone()
    }
    fn is_exact() -> bool {
        true
    }
}

/// The imaginary unit.
pub fn imag_unit() -> Scalar {
    Complex::new(BigRational::zero(), BigRational::one())
}

macro_rules! float_coeff {
    ($t:ty) => {
        impl Coeff for Complex<$t> {
            fn conj(&self) -> Self {
                Complex::new(self.re, -self.im)
            }
            fn inverse(&self) -> Option<Self> {
                if self.is_zero() {
                    None
                } else {
                    Some(Complex::new(1.0, 0.0) / *self)
                }
            }
            fn from_ratio(num: i64, den: i64) -> Self {
                Complex::new(num as $t / den as $t, 0.0)
            }
            fn from_scalar(s: &Scalar) -> Self {
                use num::ToPrimitive;
                Complex::new(
                    s.re.to_f64().unwrap_or(f64::NAN) as $t,
                    s.im.to_f64().unwrap_or(f64::NAN) as $t,
                )
            }
            fn is_exact() -> bool {
                false
            }
        }
    };
}

float_coeff!(f64);
float_coeff!(f32);

/// `(-1)^odd` in the coefficient field.
pub fn sign<C: Coeff>(odd: bool) -> C {
    if odd {
        -C::one()
    } else {
        C::one()
    }
}

/// Builds `re + im·i` from two rationals.
pub fn gaussian(re: Rational, im: Rational) -> Scalar {
    Complex::new(re, im)
}

pub fn rational(num: i64, den: i64) -> Rational {
    ratio(num, den)
}

/// Real rational as a scalar.
pub fn real(r: Rational) -> Scalar {
    Complex::new(r, BigRational::zero())
}

/// Hashable key for a coefficient, used by memo tables.
pub trait CoeffKey: Coeff + Eq + Hash {}
impl<T: Coeff + Eq + Hash> CoeffKey for T {}

/// Writes a rational as `p` or `p/q` with the sign stripped.
fn write_abs_rational(f: &mut fmt::Formatter<'_>, r: &Rational) -> fmt::Result {
    let r = r.abs();
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Sign-aware display of a scalar in the expression grammar.
///
/// `leading_negative` tells the caller whether the printed value is the
/// negation of `Magnitude`, so it can be joined with a binary minus.
pub struct Magnitude<'a>(pub &'a Scalar);

/// True iff the value prints with a leading minus under [`Magnitude`].
pub fn is_negative_like(s: &Scalar) -> bool {
    s.re.is_negative() || (s.re.is_zero() && s.im.is_negative())
}

impl Display for Magnitude<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if is_negative_like(self.0) { -self.0.clone() } else { self.0.clone() };
        match (s.re.is_zero(), s.im.is_zero()) {
            (_, true) => write_abs_rational(f, &s.re),
            (true, false) => {
                if !s.im.is_one() {
                    write_abs_rational(f, &s.im)?;
                }
                write!(f, "i")
            }
            (false, false) => {
                write!(f, "(")?;
                write_abs_rational(f, &s.re)?;
                write!(f, "{}", if s.im.is_negative() { " - " } else { " + " })?;
                if !s.im.abs().is_one() {
                    write_abs_rational(f, &s.im)?;
                }
                write!(f, "i)")
            }
        }
    }
}

/// Displays a scalar as a grammar expression, e.g. `-3/4i`.
pub fn format_scalar(s: &Scalar) -> String {
    let body = Magnitude(s).to_string();
    if is_negative_like(s) {
        if body.starts_with('(') {
            format!("-1*{body}")
        } else if body == "i" {
            "-1i".into()
        } else {
            format!("-{body}")
        }
    } else {
        body
    }
}

/// Writes `Σ c·m` in the expression grammar; an empty `m` is the unit.
pub fn write_combination<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Scalar)>,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in terms {
        let neg = is_negative_like(c);
        let mag = Magnitude(c).to_string();
        if first {
            // A bare `-` may only prefix a numeric literal.
            if neg {
                let unit = (!m.is_empty() && mag == "1") || mag == "i";
                f.write_str(if mag.starts_with('(') || unit { "-1*" } else { "-" })?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        match (m.is_empty(), mag == "1") {
            (true, _) => f.write_str(&mag)?,
            (false, true) => f.write_str(&m)?,
            (false, false) => write!(f, "{mag}*{m}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Lossy conversion for reporting.
pub fn to_f64(r: &Rational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let a = gaussian(rational(3, 4), rational(-1, 2));
        let inv = a.inverse().unwrap();
        assert_eq!(a.clone() * inv, Scalar::one());
        assert_eq!(a.conj().conj(), a);
        assert!(Scalar::zero().inverse().is_none());
    }

    #[test]
    fn printing() {
        assert_eq!(format_scalar(&Scalar::from_ratio(-3, 4)), "-3/4");
        assert_eq!(format_scalar(&imag_unit()), "i");
        // a bare `-i` is not a scalar literal, so the unit is spelled out
        assert_eq!(format_scalar(&-imag_unit()), "-1i");
        assert_eq!(format_scalar(&gaussian(rational(1, 2), rational(-2, 1))), "(1/2 - 2i)");
    }
}
