//! Exact scalar arithmetic: prime fields `F_p` (odd `p < 2^31`) and the
//! rationals.  Every operation goes through a [`FieldSpec`] handle so the
//! layers above never hard-code a field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default prime used throughout the crate when no field is specified.
pub const DEFAULT_PRIME: u32 = 32003;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum FieldSpec {
    /// Prime field of odd characteristic `p`, `2 < p < 2^31`.
    Fp(u32),
    /// The field of rational numbers.
    Q,
}

/// Deterministic Miller-Rabin, exact for all `n < 2^32`.
fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let n64 = n as u64;
    let mut d = n64 - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 7, 61] {
        let mut x = powmod(a % n64, d, n64);
        if x == 1 || x == n64 - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n64);
            if x == n64 - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

impl FieldSpec {
    pub fn fp(p: u32) -> Result<Self> {
        if p <= 2 || p >= (1 << 31) {
            return Err(Error::BadField(format!("characteristic {p} out of range")));
        }
        if !is_prime_u32(p) {
            return Err(Error::BadField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Fp(p))
    }

    pub fn default_prime() -> Self {
        FieldSpec::Fp(DEFAULT_PRIME)
    }

    /// Parses `fp:32003` or `q`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Q);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u32 = rest
                .parse()
                .map_err(|_| Error::BadField(format!("bad characteristic {rest:?}")))?;
            return Self::fp(p);
        }
        Err(Error::BadField(format!("unrecognised field {s:?}")))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Fp(_) => Scalar::Fp(0),
            FieldSpec::Q => Scalar::Q(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Fp(_) => Scalar::Fp(1),
            FieldSpec::Q => Scalar::Q(BigRational::one()),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Fp(p) => {
                let p = *p as i64;
                Scalar::Fp(n.rem_euclid(p) as u64)
            }
            FieldSpec::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp((x + y) % *p as u64)
            }
            (FieldSpec::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                let p = *p as u64;
                Scalar::Fp((x + p - y) % p)
            }
            (FieldSpec::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x - y),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Fp(p), Scalar::Fp(x)) => {
                let p = *p as u64;
                Scalar::Fp((p - x) % p)
            }
            (FieldSpec::Q, Scalar::Q(x)) => Scalar::Q(-x),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp((x * y) % *p as u64)
            }
            (FieldSpec::Q, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        match (self, a) {
            (FieldSpec::Fp(p), Scalar::Fp(x)) => {
                if *x == 0 {
                    return Err(Error::DivisionByZero);
                }
                // Fermat: x^(p-2) mod p.
                Ok(Scalar::Fp(powmod(*x, *p as u64 - 2, *p as u64)))
            }
            (FieldSpec::Q, Scalar::Q(x)) => {
                if x.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Q(x.recip()))
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Parses a scalar from its string form: an integer, or `a/b` over the
    /// rationals (also accepted over `F_p`, reduced mod `p`).
    pub fn scalar_from_str(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let n: i64 = num
            .parse()
            .map_err(|_| Error::BadInput(format!("bad scalar {s:?}")))?;
        let numerator = self.from_i64(n);
        match den {
            None => Ok(numerator),
            Some(d) => {
                let d: i64 = d
                    .parse()
                    .map_err(|_| Error::BadInput(format!("bad scalar {s:?}")))?;
                self.div(&numerator, &self.from_i64(d))
            }
        }
    }

    pub fn scalar_to_string(&self, a: &Scalar) -> String {
        match a {
            Scalar::Fp(x) => x.to_string(),
            Scalar::Q(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
        }
    }
}

/// An element of some field.  Which field is known from context; mixing
/// scalars across fields panics in the arithmetic above.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Fp(u64),
    Q(BigRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 0,
            Scalar::Q(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp(x) => *x == 1,
            Scalar::Q(x) => x.is_one(),
        }
    }

    /// Lexicographic-ish canonical key, used only to make text output stable.
    pub fn sort_key(&self) -> String {
        match self {
            Scalar::Fp(x) => format!("{x:020}"),
            Scalar::Q(x) => {
                let s = if x.is_negative() { 0 } else { 1 };
                format!("{s}{}/{}", x.numer().magnitude(), x.denom())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_prime_is_admissible() {
        assert!(is_prime_u32(DEFAULT_PRIME));
        FieldSpec::fp(DEFAULT_PRIME).unwrap();
    }

    #[test]
    fn rejects_non_primes_and_small_fields() {
        assert!(FieldSpec::fp(4).is_err());
        assert!(FieldSpec::fp(2).is_err());
        assert!(FieldSpec::fp(32001).is_err()); // 3 * 10667
        assert!(FieldSpec::fp(0).is_err());
    }

    #[test]
    fn parse_roundtrip() {
        assert_eq!(FieldSpec::parse("fp:32003").unwrap(), FieldSpec::Fp(32003));
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Q);
        assert!(FieldSpec::parse("fp:banana").is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let f = FieldSpec::fp(7).unwrap();
        let three = f.from_i64(3);
        let five = f.from_i64(5);
        assert_eq!(f.add(&three, &five), f.from_i64(1));
        assert_eq!(f.mul(&three, &five), f.from_i64(1));
        assert_eq!(f.sub(&three, &five), f.from_i64(-2));
        assert_eq!(f.from_i64(-2), f.from_i64(5));
        let inv = f.inv(&three).unwrap();
        assert!(f.mul(&three, &inv).is_one());
        assert!(f.inv(&f.zero()).is_err());
    }

    #[test]
    fn rational_arithmetic() {
        let f = FieldSpec::Q;
        let half = f.scalar_from_str("1/2").unwrap();
        let third = f.scalar_from_str("1/3").unwrap();
        let sum = f.add(&half, &third);
        assert_eq!(f.scalar_to_string(&sum), "5/6");
        let prod = f.mul(&half, &third);
        assert_eq!(f.scalar_to_string(&prod), "1/6");
        assert!(f.mul(&half, &f.from_i64(2)).is_one());
    }

    #[test]
    fn fp_inverses_across_range() {
        let f = FieldSpec::fp(DEFAULT_PRIME).unwrap();
        for n in [1i64, 2, 17, 161, 32002, 9999] {
            let a = f.from_i64(n);
            let b = f.inv(&a).unwrap();
            assert!(f.mul(&a, &b).is_one(), "inverse failed for {n}");
        }
    }
}
