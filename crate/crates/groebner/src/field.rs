//! Arithmetic in the prime field `F_p` for an odd prime `2 < p < 2^31`.
//!
//! Residues are stored as least non-negative `u64` values. Because `p` fits
//! in 31 bits, a product of two residues fits in 62 bits, so all arithmetic
//! stays inside `u64` with no overflow.
//!
//! [`PrimeField`] is a validated, copyable modulus handle whose methods
//! operate on raw residues; the kernel uses these internally once ring
//! compatibility has been established. [`Fp`] wraps a residue together with
//! its field and offers checked element-level arithmetic that reports
//! [`Error::ModulusMismatch`] instead of silently coercing.

use crate::error::{Error, Result};
use std::fmt;

pub const MAX_MODULUS_BITS: u32 = 31;

/// A validated prime modulus. Construction proves primality, so every value
/// of this type denotes a real field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Checks `2 < p < 2^31` and primality (deterministic Miller-Rabin with
    /// bases 2, 3, 5 and 7, which is exact for every candidate in range).
    pub fn new(p: u64) -> Result<Self> {
        if p <= 2 || p >= 1 << MAX_MODULUS_BITS || !is_prime(p) {
            return Err(Error::CompositeModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Canonical residue of an arbitrary signed integer.
    pub fn from_i64(&self, n: i64) -> u64 {
        let m = self.p as i64;
        let r = n % m;
        if r < 0 {
            (r + m) as u64
        } else {
            r as u64
        }
    }

    /// Canonical residue of an arbitrary unsigned integer.
    pub fn from_u64(&self, n: u64) -> u64 {
        n % self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        debug_assert!(a < self.p);
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.p && b < self.p);
        a * b % self.p
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: u64) -> Result<u64> {
        debug_assert!(a < self.p);
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        // Invariant: old_r = old_s * a (mod p), r = s * a (mod p).
        let (mut old_r, mut r) = (a as i64, self.p as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1, "gcd(a, p) must be 1 for prime p");
        Ok(self.from_i64(old_s))
    }

    /// `a / b`, failing on `b = 0`.
    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation (used for point evaluation).
    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        debug_assert!(a < self.p);
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Balanced representative in `(-p/2, p/2]`, for signed display.
    pub fn signed(&self, a: u64) -> i64 {
        debug_assert!(a < self.p);
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    pub fn element(&self, n: i64) -> Fp {
        Fp {
            value: self.from_i64(n),
            field: *self,
        }
    }
}

/// A field element: a canonical residue bound to its field. All binary
/// operations confirm both operands share one modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    value: u64,
    field: PrimeField,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &Fp) -> Result<PrimeField> {
        if self.field != other.field {
            // Report the two moduli in ascending order so the error does not
            // depend on which operand was the receiver.
            return Err(Error::ModulusMismatch {
                left: self.field.p.min(other.field.p),
                right: self.field.p.max(other.field.p),
            });
        }
        Ok(self.field)
    }

    pub fn add(&self, other: &Fp) -> Result<Fp> {
        let f = self.same_field(other)?;
        Ok(Fp {
            value: f.add(self.value, other.value),
            field: f,
        })
    }

    pub fn sub(&self, other: &Fp) -> Result<Fp> {
        let f = self.same_field(other)?;
        Ok(Fp {
            value: f.sub(self.value, other.value),
            field: f,
        })
    }

    pub fn mul(&self, other: &Fp) -> Result<Fp> {
        let f = self.same_field(other)?;
        Ok(Fp {
            value: f.mul(self.value, other.value),
            field: f,
        })
    }

    pub fn div(&self, other: &Fp) -> Result<Fp> {
        let f = self.same_field(other)?;
        Ok(Fp {
            value: f.div(self.value, other.value)?,
            field: f,
        })
    }

    pub fn neg(&self) -> Fp {
        Fp {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }

    pub fn inv(&self) -> Result<Fp> {
        Ok(Fp {
            value: self.field.inv(self.value)?,
            field: self.field,
        })
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    // Miller-Rabin. n < 3_215_031_751, so bases 2, 3, 5, 7 are conclusive.
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    a %= m;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % m;
        }
        a = a * a % m;
        e >>= 1;
    }
    acc
}
