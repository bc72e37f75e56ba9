//! Exact power series in `q`, truncated after `q^N`.
//!
//! Coefficients are arbitrary-precision integers. Binary operations on
//! series of different orders truncate to the smaller order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::enumeration::CountTable;
use crate::error::{Error, Result};

/// Coefficients of `q^0, ..., q^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 1)
    }

    /// `c * q^exponent`, or zero when `exponent > order`.
    pub fn monomial(order: usize, exponent: usize, c: i64) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = BigInt::from(c);
        }
        s
    }

    /// Series with the given leading coefficients; missing ones are zero and
    /// extra ones are dropped.
    pub fn from_coeffs<T: Into<BigInt>>(order: usize, coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, exponent: usize) -> &BigInt {
        &self.coeffs[exponent]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, exponent: usize, value: impl Into<BigInt>) {
        self.coeffs[exponent] = value.into();
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot raise the order of a truncated series"
        );
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// `1 / (1 - q^step) = 1 + q^step + q^(2 step) + ...`
    pub fn geometric(order: usize, step: usize) -> Self {
        assert!(step >= 1);
        let mut s = Self::zero(order);
        for e in (0..=order).step_by(step) {
            s.coeffs[e] = BigInt::one();
        }
        s
    }

    /// `1 + sign * q^exponent`.
    pub fn binomial_factor(order: usize, exponent: usize, sign: i64) -> Self {
        let mut s = Self::one(order);
        if exponent <= order {
            s.coeffs[exponent] += BigInt::from(sign);
        }
        s
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
        }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}q^{e}")?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|e| &self.coeffs[e] + &rhs.coeffs[e])
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|e| &self.coeffs[e] - &rhs.coeffs[e])
                .collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncatedSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $f(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

/// Serialized as `{"order": N, "coefficients": [...]}`. Coefficients that
/// fit in an `i64` are JSON numbers, larger ones decimal strings.
impl Serialize for TruncatedSeries {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let coefficients: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(c.to_string()),
            })
            .collect();
        let mut st = serializer.serialize_struct("TruncatedSeries", 2)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("coefficients", &coefficients)?;
        st.end()
    }
}

/// Places `table[n]` at `q^(stride * n)`.
pub fn series_from_counts(
    table: &CountTable,
    stride: usize,
    order: usize,
) -> Result<TruncatedSeries> {
    if stride == 0 {
        return Err(Error::ZeroStride);
    }
    if table.counts().is_empty() {
        return Ok(TruncatedSeries::zero(order));
    }
    let required = order / stride;
    let available = table.counts().len() - 1;
    if available < required {
        return Err(Error::TableTooShort {
            available,
            required,
        });
    }
    let mut s = TruncatedSeries::zero(order);
    for (n, count) in table.rows().take(required + 1) {
        s.coeffs[stride * n] = BigInt::from(count);
    }
    Ok(s)
}

/// `Σ_{n>=0} q^(n(n+1)/2)`.
pub fn triangular_series(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    let mut n = 0;
    loop {
        let e = n * (n + 1) / 2;
        if e > order {
            break;
        }
        s.coeffs[e] = BigInt::one();
        n += 1;
    }
    s
}

/// The infinite products that can be expanded by [`product_form`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    /// `∏_{n>=1} (1 - q^(nt))^t / (1 - q^n)`, generating `c_t(n)`.
    CoreGf { t: usize },
    /// `∏_{n>=1} (1 - q^(4nt))^t (1 + q^(2n-1))`, generating `sc_{2t}(n)`.
    Sc2tGf { t: usize },
    /// `∏_{n>=1} (1 - q^(2n)) / (1 - q^(2n-1))`, which equals the triangular
    /// series.
    GaussRhs,
}

/// Expands an infinite product through `q^order`.
///
/// A factor whose lowest non-constant exponent exceeds `order` is the
/// identity modulo `q^(order+1)`, so the product stops at the first such
/// factor. Division by `1 - q^k` is multiplication by the geometric series
/// in `q^k`.
pub fn product_form(kind: ProductKind, order: usize) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(order);
    match kind {
        ProductKind::CoreGf { t } => {
            if t == 0 {
                return Err(Error::ZeroModulus);
            }
            let power = u32::try_from(t).map_err(|_| Error::Overflow("product exponent"))?;
            for n in 1..=order {
                acc = &acc * &TruncatedSeries::geometric(order, n);
                if n * t <= order {
                    acc = &acc * &TruncatedSeries::binomial_factor(order, n * t, -1).pow(power);
                }
            }
        }
        ProductKind::Sc2tGf { t } => {
            if t == 0 {
                return Err(Error::ZeroModulus);
            }
            let power = u32::try_from(t).map_err(|_| Error::Overflow("product exponent"))?;
            for n in 1.. {
                if 2 * n - 1 > order {
                    break;
                }
                acc = &acc * &TruncatedSeries::binomial_factor(order, 2 * n - 1, 1);
                if 4 * n * t <= order {
                    acc = &acc * &TruncatedSeries::binomial_factor(order, 4 * n * t, -1).pow(power);
                }
            }
        }
        ProductKind::GaussRhs => {
            for n in 1.. {
                if 2 * n - 1 > order {
                    break;
                }
                acc = &acc * &TruncatedSeries::geometric(order, 2 * n - 1);
                if 2 * n <= order {
                    acc = &acc * &TruncatedSeries::binomial_factor(order, 2 * n, -1);
                }
            }
        }
    }
    Ok(acc)
}

/// First coefficient at which two series differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exponent: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of comparing two series coefficient by coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub order: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares `lhs` and `rhs` through their common order, which must match.
pub fn check_identity(lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Result<IdentityReport> {
    if lhs.order() != rhs.order() {
        return Err(Error::OrderMismatch(lhs.order(), rhs.order()));
    }
    let first_mismatch = lhs
        .coeffs
        .iter()
        .zip(&rhs.coeffs)
        .position(|(a, b)| a != b)
        .map(|e| Mismatch {
            exponent: e,
            lhs: lhs.coeffs[e].to_string(),
            rhs: rhs.coeffs[e].to_string(),
        });
    Ok(IdentityReport {
        order: lhs.order(),
        first_mismatch,
    })
}
