//! Exact arithmetic in the field Q(i, √2).
//!
//! Every constant appearing in the operator calculus lives here: i from the
//! Cartan operators, 1/2 from the rotation generators, 1/√2 from the short
//! root vectors in odd dimension. An element is stored as four reduced
//! rational components a + b·i + c·√2 + d·i·√2, so all arithmetic is exact
//! and no floating point ever enters the engine.

use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

pub use crate::rational::Rat;

/// Shorthand for a rational from a numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num as i128, den as i128)
}

/// An element a + b·i + c·√2 + d·i·√2 of Q(i, √2), components always reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coefficient {
    pub re: Rat,
    pub im: Rat,
    pub re_rt2: Rat,
    pub im_rt2: Rat,
}

impl Coefficient {
    pub const fn new(re: Rat, im: Rat, re_rt2: Rat, im_rt2: Rat) -> Self {
        Coefficient {
            re,
            im,
            re_rt2,
            im_rt2,
        }
    }

    pub fn zero() -> Self {
        Coefficient::from_rat(Rat::ZERO)
    }

    pub fn one() -> Self {
        Coefficient::from_rat(Rat::ONE)
    }

    pub fn from_rat(r: Rat) -> Self {
        Coefficient::new(r, Rat::ZERO, Rat::ZERO, Rat::ZERO)
    }

    pub fn from_int(n: i64) -> Self {
        Coefficient::from_rat(Rat::from_integer(n as i128))
    }

    /// The imaginary unit i.
    pub fn i() -> Self {
        Coefficient::new(Rat::ZERO, Rat::ONE, Rat::ZERO, Rat::ZERO)
    }

    /// √2.
    pub fn rt2() -> Self {
        Coefficient::new(Rat::ZERO, Rat::ZERO, Rat::ONE, Rat::ZERO)
    }

    /// 1/2.
    pub fn half() -> Self {
        Coefficient::from_rat(rat(1, 2))
    }

    /// 1/√2 = √2/2.
    pub fn inv_rt2() -> Self {
        Coefficient::new(Rat::ZERO, Rat::ZERO, rat(1, 2), Rat::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero() && self.re_rt2.is_zero() && self.im_rt2.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero() && self.re_rt2.is_zero() && self.im_rt2.is_zero()
    }

    /// True when the element lies in Q (no i and no √2 part).
    pub fn is_rational(&self) -> bool {
        self.im.is_zero() && self.re_rt2.is_zero() && self.im_rt2.is_zero()
    }

    /// The rational part, provided the element is purely rational.
    pub fn as_rat(&self) -> Option<Rat> {
        self.is_rational().then_some(self.re)
    }

    /// Galois conjugate sending i to -i.
    pub fn conj_i(&self) -> Self {
        Coefficient::new(self.re, -self.im, self.re_rt2, -self.im_rt2)
    }

    /// Galois conjugate sending √2 to -√2.
    pub fn conj_rt2(&self) -> Self {
        Coefficient::new(self.re, self.im, -self.re_rt2, -self.im_rt2)
    }

    /// Multiplicative inverse via the field norm: the product of the other
    /// three Galois conjugates is divided by the rational norm, so only one
    /// rational inversion is performed.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("division by zero in Q(i,\u{221a}2)"));
        }
        let cofactor = self.conj_i() * self.conj_rt2() * self.conj_i().conj_rt2();
        let norm = *self * cofactor;
        let norm = norm
            .as_rat()
            .expect("product of all Galois conjugates is rational");
        debug_assert!(!norm.is_zero());
        Ok(cofactor * Coefficient::from_rat(norm.recip()))
    }

    pub fn div(&self, other: &Coefficient) -> Result<Self> {
        Ok(*self * other.inv()?)
    }

    /// Canonical textual form, e.g. "-1/2 + 3*i + 1/2*r2 + i*r2"; "0" when zero.
    fn render(&self) -> String {
        fn part(r: Rat, unit: &str, out: &mut String) {
            if r.is_zero() {
                return;
            }
            if out.is_empty() {
                if r.is_negative() {
                    out.push('-');
                }
            } else if r.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let a = r.abs();
            if unit.is_empty() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(unit);
            } else {
                out.push_str(&format!("{a}*{unit}"));
            }
        }
        let mut out = String::new();
        part(self.re, "", &mut out);
        part(self.im, "i", &mut out);
        part(self.re_rt2, "r2", &mut out);
        part(self.im_rt2, "i*r2", &mut out);
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parse the textual form produced by `Display`. Accepts any signed
    /// combination of rational multiples of 1, i, r2 and i*r2.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty coefficient".into()));
        }
        // Tokenize into signed terms: split on " + " / " - " while keeping a
        // possible leading sign.
        let mut terms: Vec<(i64, String)> = Vec::new();
        let mut rest = s;
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        loop {
            let plus = rest.find(" + ");
            let minus = rest.find(" - ");
            let (cut, next_sign) = match (plus, minus) {
                (Some(p), Some(m)) if p < m => (Some(p), 1),
                (Some(p), None) => (Some(p), 1),
                (_, Some(m)) => (Some(m), -1),
                (None, None) => (None, 1),
            };
            match cut {
                Some(pos) => {
                    terms.push((sign, rest[..pos].trim().to_string()));
                    rest = &rest[pos + 3..];
                    sign = next_sign;
                }
                None => {
                    terms.push((sign, rest.trim().to_string()));
                    break;
                }
            }
        }
        let mut out = Coefficient::zero();
        for (sg, body) in terms {
            let (rat_text, unit) = if let Some(t) = body.strip_suffix("i*r2") {
                (t.trim_end_matches('*').trim(), 3)
            } else if let Some(t) = body.strip_suffix("r2") {
                (t.trim_end_matches('*').trim(), 2)
            } else if let Some(t) = body.strip_suffix('i') {
                (t.trim_end_matches('*').trim(), 1)
            } else {
                (body.as_str(), 0)
            };
            let r = if rat_text.is_empty() {
                Rat::ONE
            } else {
                parse_rat(rat_text)?
            };
            let r = r * Rat::from_integer(sg as i128);
            match unit {
                0 => out.re += r,
                1 => out.im += r,
                2 => out.re_rt2 += r,
                _ => out.im_rt2 += r,
            }
        }
        Ok(out)
    }
}

/// Parse "p" or "p/q" into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: i128 = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: i128 = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d == 0 {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Render a rational as "p" or "p/q" with reduced components.
pub fn rat_to_string(r: Rat) -> String {
    r.to_string()
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[inline]
fn add_nz(x: Rat, y: Rat) -> Rat {
    if x.is_zero() {
        y
    } else if y.is_zero() {
        x
    } else {
        x + y
    }
}

#[inline]
fn mul_nz(x: Rat, y: Rat) -> Rat {
    if x.is_zero() || y.is_zero() {
        Rat::ZERO
    } else {
        x * y
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: Coefficient) -> Coefficient {
        Coefficient::new(
            add_nz(self.re, rhs.re),
            add_nz(self.im, rhs.im),
            add_nz(self.re_rt2, rhs.re_rt2),
            add_nz(self.im_rt2, rhs.im_rt2),
        )
    }
}

impl AddAssign for Coefficient {
    fn add_assign(&mut self, rhs: Coefficient) {
        *self = *self + rhs;
    }
}

impl Sub for Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: Coefficient) -> Coefficient {
        self + (-rhs)
    }
}

impl SubAssign for Coefficient {
    fn sub_assign(&mut self, rhs: Coefficient) {
        *self = *self - rhs;
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient::new(-self.re, -self.im, -self.re_rt2, -self.im_rt2)
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        // Closed multiplication table for the basis {1, i, √2, i√2}:
        // i² = -1, (√2)² = 2, (i√2)² = -2, i·√2 = i√2, √2·i√2 = 2i, i·i√2 = -√2.
        let (a1, b1, c1, d1) = (self.re, self.im, self.re_rt2, self.im_rt2);
        let (a2, b2, c2, d2) = (rhs.re, rhs.im, rhs.re_rt2, rhs.im_rt2);
        // most scalars in the calculus are rational multiples of 1 or i
        if b1.is_zero() && c1.is_zero() && d1.is_zero() {
            if a1.is_zero() {
                return Coefficient::zero();
            }
            return Coefficient::new(
                mul_nz(a1, a2),
                mul_nz(a1, b2),
                mul_nz(a1, c2),
                mul_nz(a1, d2),
            );
        }
        if b2.is_zero() && c2.is_zero() && d2.is_zero() {
            if a2.is_zero() {
                return Coefficient::zero();
            }
            return Coefficient::new(
                mul_nz(a1, a2),
                mul_nz(b1, a2),
                mul_nz(c1, a2),
                mul_nz(d1, a2),
            );
        }
        let two = Rat::from_integer(2);
        Coefficient::new(
            add_nz(
                add_nz(mul_nz(a1, a2), -mul_nz(b1, b2)),
                mul_nz(two, add_nz(mul_nz(c1, c2), -mul_nz(d1, d2))),
            ),
            add_nz(
                add_nz(mul_nz(a1, b2), mul_nz(b1, a2)),
                mul_nz(two, add_nz(mul_nz(c1, d2), mul_nz(d1, c2))),
            ),
            add_nz(
                add_nz(mul_nz(a1, c2), mul_nz(c1, a2)),
                -add_nz(mul_nz(b1, d2), mul_nz(d1, b2)),
            ),
            add_nz(
                add_nz(mul_nz(a1, d2), mul_nz(d1, a2)),
                add_nz(mul_nz(b1, c2), mul_nz(c1, b2)),
            ),
        )
    }
}

impl MulAssign for Coefficient {
    fn mul_assign(&mut self, rhs: Coefficient) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn defining_relations() {
        assert_eq!(Coefficient::i() * Coefficient::i(), -Coefficient::one());
        assert_eq!(
            Coefficient::rt2() * Coefficient::rt2(),
            Coefficient::from_int(2)
        );
        assert_eq!(
            Coefficient::inv_rt2() * Coefficient::inv_rt2(),
            Coefficient::half()
        );
    }

    #[test]
    fn inverse_of_one_plus_rt2() {
        // (1 + √2)(-1 + √2) = 1
        let x = Coefficient::one() + Coefficient::rt2();
        let expected = -Coefficient::one() + Coefficient::rt2();
        assert_eq!(x.inv().unwrap(), expected);
        assert_eq!(x * expected, Coefficient::one());
    }

    #[test]
    fn zero_inverse_is_domain_error() {
        assert!(matches!(
            Coefficient::zero().inv(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn display_examples() {
        let x = Coefficient::new(rat(-1, 2), rat(3, 1), rat(1, 2), rat(1, 1));
        assert_eq!(x.to_string(), "-1/2 + 3*i + 1/2*r2 + i*r2");
        assert_eq!(Coefficient::zero().to_string(), "0");
        assert_eq!((-Coefficient::i()).to_string(), "-i");
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_coeff() -> impl Strategy<Value = Coefficient> {
        (arb_rat(), arb_rat(), arb_rat(), arb_rat())
            .prop_map(|(a, b, c, d)| Coefficient::new(a, b, c, d))
    }

    proptest! {
        #[test]
        fn ring_laws(x in arb_coeff(), y in arb_coeff(), z in arb_coeff()) {
            prop_assert_eq!(x + y, y + x);
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x + y) + z, x + (y + z));
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * (y + z), x * y + x * z);
        }

        #[test]
        fn field_inverse(x in arb_coeff()) {
            prop_assume!(!x.is_zero());
            prop_assert_eq!(x * x.inv().unwrap(), Coefficient::one());
        }

        #[test]
        fn display_round_trip(x in arb_coeff()) {
            prop_assert_eq!(Coefficient::parse(&x.to_string()).unwrap(), x);
        }
    }
}
