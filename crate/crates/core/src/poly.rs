//! Dense integer polynomials in one variable `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
    #[error("invalid coefficient {0:?}")]
    BadCoefficient(String),
}

/// Coefficients ascending by power: `coeffs[i]` multiplies `t^i`.
/// The zero polynomial has no coefficients; otherwise the last is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Polynomial {
        Polynomial::from_coeffs(vec![c.into()])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Polynomial {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Polynomial { coeffs }
    }

    /// `t − c`.
    pub fn t_minus(c: i64) -> Polynomial {
        Polynomial::from_coeffs(vec![BigInt::from(-c), BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Polynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients given highest power first.
    pub fn from_descending(coeffs: impl IntoIterator<Item = BigInt>) -> Polynomial {
        let mut v: Vec<BigInt> = coeffs.into_iter().collect();
        v.reverse();
        Polynomial::from_coeffs(v)
    }

    /// Parse decimal coefficient strings, highest power first.
    pub fn from_decimal_descending<S: AsRef<str>>(coeffs: &[S]) -> Result<Polynomial, PolyError> {
        let parsed = coeffs
            .iter()
            .map(|s| {
                s.as_ref()
                    .parse::<BigInt>()
                    .map_err(|_| PolyError::BadCoefficient(s.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::from_descending(parsed))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest power with a nonzero coefficient.
    pub fn lowest_power(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn descending(&self) -> impl Iterator<Item = &BigInt> {
        self.coeffs.iter().rev()
    }

    pub fn to_decimal_descending(&self) -> Vec<String> {
        self.descending().map(ToString::to_string).collect()
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc *= t;
            acc += c;
        }
        acc
    }

    pub fn eval_u64(&self, t: u64) -> BigInt {
        self.eval(&BigInt::from(t))
    }

    /// Quotient and remainder for a divisor whose leading coefficient
    /// divides every leading term met along the way.
    pub fn div_rem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial), PolyError> {
        let d_deg = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = divisor.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d_deg];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + d_deg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::InexactDivision);
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        Ok((Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem)))
    }

    /// `self / divisor`, which must leave no remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial, PolyError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::InexactDivision)
        }
    }

    /// `t(t−1)…(t−n+1)`; the empty product for `n = 0`.
    pub fn falling_factorial(n: usize) -> Polynomial {
        (0..n as i64).fold(Polynomial::one(), |acc, k| &acc * &Polynomial::t_minus(k))
    }

    fn zip_with(&self, other: &Polynomial, f: impl Fn(&mut BigInt, &BigInt)) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = self.coeffs.clone();
        out.resize(len, BigInt::zero());
        for (a, b) in out.iter_mut().zip(other.coeffs.iter()) {
            f(a, b);
        }
        Polynomial::from_coeffs(out)
    }
}

/// Falling factorial, the chromatic polynomial of `K_n`.
pub fn falling_factorial(n: usize) -> Polynomial {
    Polynomial::falling_factorial(n)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| *a += b)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| *a -= b)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Descending powers with explicit signs: `t^3 - 3t^2 + 2t`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
