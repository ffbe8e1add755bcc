//! Coefficient fields: the rationals and the prime fields `F_p`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::{generic_rank, integer_rank, Matrix};
use super::{LinalgError, Rational};

/// Arithmetic of a coefficient field. Elimination routines are generic over it.
pub trait Field: Sync + Send {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)] // Fp needs its modulus
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// `a -= factor * b`
    fn sub_mul_assign(&self, a: &mut Self::Elem, factor: &Self::Elem, b: &Self::Elem) {
        *a = self.sub(a, &self.mul(factor, b));
    }

    fn rank(&self, m: &Matrix<Self::Elem>) -> usize {
        generic_rank(self, m)
    }

    /// Rank of an integer matrix given as rows of length `cols`, read in this field.
    fn rank_of_integers(&self, rows: &[Vec<i64>], cols: usize) -> usize {
        let converted = rows
            .iter()
            .map(|r| r.iter().map(|&v| self.from_i64(v)).collect())
            .collect();
        self.rank(&Matrix::from_rows(cols, converted).expect("rows have length cols"))
    }
}

/// The rationals.
#[derive(Debug, Clone, Copy, Default)]
pub struct Q;

impl Field for Q {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_i64(&self, v: i64) -> Rational {
        Rational::from_integer(v)
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn inv(&self, a: &Rational) -> Rational {
        a.recip().expect("inverse of zero")
    }

    /// Integer matrices take the fraction-free path.
    fn rank(&self, m: &Matrix<Rational>) -> usize {
        let small: Option<Vec<Vec<i64>>> = (0..m.rows())
            .map(|r| m.row(r).iter().map(Rational::to_i64).collect())
            .collect();
        small
            .and_then(|rows| integer_rank(&rows, m.cols()))
            .unwrap_or_else(|| generic_rank(self, m))
    }

    fn rank_of_integers(&self, rows: &[Vec<i64>], cols: usize) -> usize {
        integer_rank(rows, cols).unwrap_or_else(|| {
            let converted = rows
                .iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
                .collect();
            generic_rank(
                self,
                &Matrix::from_rows(cols, converted).expect("rows have length cols"),
            )
        })
    }
}

/// A prime field with residues `0..p` stored as `u32`.
#[derive(Debug, Clone, Copy)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Result<Self, LinalgError> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Fp { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let p = self.p as u64;
        let mut acc = 1u64;
        base %= p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    }
}

impl Field for Fp {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        (*a as u64 * *b as u64 % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a as u64, self.p as u64 - 2) as u32
    }
}

/// `F_2` with a bit-packed rank routine. Elements are `0` or `1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Gf2;

impl Field for Gf2 {
    type Elem = u8;

    fn zero(&self) -> u8 {
        0
    }
    fn one(&self) -> u8 {
        1
    }
    fn from_i64(&self, v: i64) -> u8 {
        (v & 1) as u8
    }
    fn is_zero(&self, a: &u8) -> bool {
        *a == 0
    }
    fn add(&self, a: &u8, b: &u8) -> u8 {
        a ^ b
    }
    fn sub(&self, a: &u8, b: &u8) -> u8 {
        a ^ b
    }
    fn mul(&self, a: &u8, b: &u8) -> u8 {
        a & b
    }
    fn inv(&self, a: &u8) -> u8 {
        assert!(*a != 0, "inverse of zero");
        1
    }
    fn sub_mul_assign(&self, a: &mut u8, factor: &u8, b: &u8) {
        *a ^= factor & b;
    }

    fn rank(&self, m: &Matrix<u8>) -> usize {
        gf2_packed_rank(m)
    }
}

/// Rank over `F_2` on rows packed into 64-bit words.
pub fn gf2_packed_rank(m: &Matrix<u8>) -> usize {
    let words = m.cols().div_ceil(64);
    if words == 0 {
        return 0;
    }
    let mut rows: Vec<Vec<u64>> = (0..m.rows())
        .map(|r| {
            let mut packed = vec![0u64; words];
            for (c, &v) in m.row(r).iter().enumerate() {
                if v & 1 == 1 {
                    packed[c / 64] |= 1 << (c % 64);
                }
            }
            packed
        })
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            if row[w] & bit != 0 {
                for (a, b) in row.iter_mut().zip(pivot_row).skip(w) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Which coefficient field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

impl FieldSpec {
    /// `0` selects the rationals; anything else must be a prime below `2^31`.
    pub fn new(characteristic: u32) -> Result<Self, LinalgError> {
        match characteristic {
            0 => Ok(FieldSpec::Rational),
            p => Fp::new(p).map(|_| FieldSpec::Prime(p)),
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// Accepts `q`, `f2`, `f3`, `fp:<p>` (case-insensitive) and the display form `F<p>`.
impl FromStr for FieldSpec {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        let bad = || LinalgError::ParseField(s.to_string());
        if lower == "q" {
            return Ok(FieldSpec::Rational);
        }
        let digits = lower
            .strip_prefix("fp:")
            .or_else(|| lower.strip_prefix('f'))
            .ok_or_else(bad)?;
        let p: u32 = digits.parse().map_err(|_| bad())?;
        if p == 0 {
            return Err(bad());
        }
        FieldSpec::new(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Runs `$body` with `$f` bound to a reference to the concrete field for `$spec`.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            $crate::linalg::FieldSpec::Rational => {
                let $f = &$crate::linalg::Q;
                $body
            }
            $crate::linalg::FieldSpec::Prime(2) => {
                let $f = &$crate::linalg::Gf2;
                $body
            }
            $crate::linalg::FieldSpec::Prime(p) => {
                let $f = &$crate::linalg::Fp::new(p).expect("FieldSpec holds a prime");
                $body
            }
        }
    };
}
