//! Unitarity regions of the Neveu-Schwarz N=2 super-Virasoro algebra.
//!
//! Inputs are arbitrary exact rationals; all comparisons happen in
//! arbitrary-precision arithmetic so no input can overflow.

use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Level, Rational};

/// Which region of the `(c, h, q)` unitarity classification a point lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitarityClass {
    /// `c >= 3` and the NS1 quadratic is nonnegative on all half-integers.
    Ns1,
    /// `c >= 3` on the NS2 boundary.
    Ns2,
    /// Discrete series at level `n`, with `0 <= l <= n`, `|m| <= l`, `l + m` even.
    Ns3 {
        n: u32,
        l: i64,
        m: i64,
    },
    NotUnitary,
}

impl fmt::Display for UnitarityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitarityClass::Ns1 => f.write_str("NS1"),
            UnitarityClass::Ns2 => f.write_str("NS2"),
            UnitarityClass::Ns3 { n, l, m } => write!(f, "NS3 (n={n}, l={l}, m={m})"),
            UnitarityClass::NotUnitary => f.write_str("not unitary"),
        }
    }
}

fn big(x: Rational) -> BigRational {
    BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// `2h - 2xq + a(x^2 - 1/4)` with `a = c/3 - 1`.
struct Quadratic {
    a: BigRational,
    h: BigRational,
    q: BigRational,
}

impl Quadratic {
    fn eval(&self, x: &BigRational) -> BigRational {
        let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
        int(2) * &self.h - int(2) * x * &self.q + &self.a * (x * x - quarter)
    }

    /// Nonnegative at every half-integer.
    fn nonnegative_on_half_integers(&self) -> bool {
        if self.a.is_zero() {
            // linear in x: bounded below on both tails only when flat
            return self.q.is_zero() && !self.h.is_negative();
        }
        // convex: the minimum over half-integers sits next to the vertex q/a
        let vertex = &self.q / &self.a;
        let below = (vertex - half()).floor() + half();
        let above = &below + int(1);
        !self.eval(&below).is_negative() && !self.eval(&above).is_negative()
    }

    /// Rational zeros of the quadratic (or linear) function, when finite.
    fn rational_roots(&self) -> alloc::vec::Vec<BigRational> {
        let mut roots = alloc::vec::Vec::new();
        if self.a.is_zero() {
            if !self.q.is_zero() {
                roots.push(&self.h / &self.q);
            }
            return roots;
        }
        // a x^2 - 2q x + (2h - a/4) = 0, discriminant / 4:
        let disc = &self.q * &self.q - int(2) * &self.a * &self.h
            + &self.a * &self.a * BigRational::new(BigInt::one(), BigInt::from(4));
        if let Some(root) = rational_sqrt(&disc) {
            roots.push((&self.q + &root) / &self.a);
            roots.push((&self.q - root) / &self.a);
        }
        roots
    }
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (num, den) = (x.numer(), x.denom());
    let (rn, rd) = (num.sqrt(), den.sqrt());
    (&rn * &rn == *num && &rd * &rd == *den).then(|| BigRational::new(rn, rd))
}

fn is_half_integer(x: &BigRational) -> bool {
    *x.denom() == BigInt::from(2)
}

fn ns1(c: &BigRational, quad: &Quadratic) -> bool {
    *c >= int(3) && quad.nonnegative_on_half_integers()
}

fn ns2(c: &BigRational, quad: &Quadratic) -> bool {
    if *c < int(3) {
        return false;
    }
    let third = c / int(3);
    if (int(2) * &quad.a * &quad.h - &quad.q * &quad.q + third).is_negative() {
        return false;
    }
    quad.rational_roots().into_iter().any(|x| {
        if !is_half_integer(&x) {
            return false;
        }
        let step = if x.is_positive() { int(1) } else { int(-1) };
        quad.eval(&(x + step)).is_negative()
    })
}

fn ns3(c: &BigRational, h: &BigRational, q: &BigRational) -> Option<UnitarityClass> {
    if c.is_negative() || *c >= int(3) {
        return None;
    }
    // c = 3n/(n+2)  <=>  n = 2c/(3-c)
    let n = int(2) * c / (int(3) - c);
    if !n.is_integer() || n > int(i64::from(Level::MAX)) {
        return None;
    }
    let n: i64 = n.to_integer().try_into().ok()?;
    let height = int(n + 2);
    let m = -(q * &height);
    if !m.is_integer() {
        return None;
    }
    let m: i64 = m.to_integer().try_into().ok()?;
    let target = h * int(4) * height;
    (0..=n)
        .filter(|l| m.abs() <= *l && (l + m) % 2 == 0)
        .find(|l| int(l * (l + 2) - m * m) == target)
        .map(|l| UnitarityClass::Ns3 { n: n as u32, l, m })
}

/// Classifies `(c, h, q)` into NS1, NS2, NS3, checked in that order.
///
/// NS2 is read with `2h - 2nq` in its first condition, matching the NS1
/// quadratic.
pub fn unitarity_class(c: Rational, h: Rational, q: Rational) -> UnitarityClass {
    let (c, h, q) = (big(c), big(h), big(q));
    let quad = Quadratic { a: &c / int(3) - int(1), h: h.clone(), q: q.clone() };
    if ns1(&c, &quad) {
        UnitarityClass::Ns1
    } else if ns2(&c, &quad) {
        UnitarityClass::Ns2
    } else if let Some(class) = ns3(&c, &h, &q) {
        class
    } else {
        UnitarityClass::NotUnitary
    }
}
