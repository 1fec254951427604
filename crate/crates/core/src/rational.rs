//! Reduced rationals over 128-bit integers.
//!
//! The operator calculus almost exclusively produces denominators that are
//! powers of two (halves from the rotation generators, quarters from the
//! Cartan-basis combinations, and the √2 component of the short roots), so
//! reduction there needs only shifts. Exact elimination introduces general
//! denominators; those go through a binary gcd, and the cases that provably
//! end up reduced skip the divisions entirely.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Exactness must never degrade silently: every arithmetic step is checked
/// and an out-of-range intermediate aborts with this message instead of
/// wrapping. The verification instances sit many orders of magnitude below
/// the 128-bit envelope.
const OVERFLOW: &str = "exact rational overflow: intermediate exceeds the 128-bit envelope";

#[inline]
fn cm(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect(OVERFLOW)
}

#[inline]
fn ca(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect(OVERFLOW)
}

/// A rational number in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i128,
    den: i128,
}

/// Binary gcd; both arguments nonzero.
fn gcd_nonzero(mut a: u128, mut b: u128) -> u128 {
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

impl Rat {
    pub const ZERO: Rat = Rat { num: 0, den: 1 };
    pub const ONE: Rat = Rat { num: 1, den: 1 };

    pub fn new(num: i128, den: i128) -> Rat {
        assert!(den != 0, "zero denominator");
        if num == 0 {
            return Rat::ZERO;
        }
        let (num, den) = if den < 0 {
            (num.checked_neg().expect(OVERFLOW), den.checked_neg().expect(OVERFLOW))
        } else {
            (num, den)
        };
        let g = gcd_nonzero(num.unsigned_abs(), den.unsigned_abs()) as i128;
        Rat {
            num: num / g,
            den: den / g,
        }
    }

    /// Construct a value already known to be in lowest terms.
    #[inline]
    fn reduced(num: i128, den: i128) -> Rat {
        debug_assert!(den > 0);
        debug_assert!(
            num == 0 && den == 1
                || gcd_nonzero(num.unsigned_abs(), den.unsigned_abs()) == 1
        );
        Rat { num, den }
    }

    #[inline]
    pub fn from_integer(n: i128) -> Rat {
        Rat { num: n, den: 1 }
    }

    pub fn zero() -> Rat {
        Rat::ZERO
    }

    pub fn one() -> Rat {
        Rat::ONE
    }

    #[inline]
    pub fn numer(&self) -> i128 {
        self.num
    }

    #[inline]
    pub fn denom(&self) -> i128 {
        self.den
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.num == 1 && self.den == 1
    }

    #[inline]
    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn abs(&self) -> Rat {
        Rat {
            num: self.num.abs(),
            den: self.den,
        }
    }

    pub fn recip(&self) -> Rat {
        assert!(self.num != 0, "reciprocal of zero");
        if self.num < 0 {
            Rat::reduced(-self.den, -self.num)
        } else {
            Rat::reduced(self.den, self.num)
        }
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::ZERO
    }
}

impl Add for Rat {
    type Output = Rat;
    #[inline]
    fn add(self, rhs: Rat) -> Rat {
        if self.num == 0 {
            return rhs;
        }
        if rhs.num == 0 {
            return self;
        }
        if self.den == rhs.den {
            let s = ca(self.num, rhs.num);
            if s == 0 {
                return Rat::ZERO;
            }
            if self.den == 1 {
                return Rat::reduced(s, 1);
            }
            let g = gcd_nonzero(s.unsigned_abs(), self.den.unsigned_abs()) as i128;
            return if g == 1 {
                Rat::reduced(s, self.den)
            } else {
                Rat::reduced(s / g, self.den / g)
            };
        }
        let g = if self.den == 1 || rhs.den == 1 {
            1
        } else {
            gcd_nonzero(self.den.unsigned_abs(), rhs.den.unsigned_abs()) as i128
        };
        if g == 1 {
            // coprime denominators: the result is already reduced
            return Rat::reduced(
                ca(cm(self.num, rhs.den), cm(rhs.num, self.den)),
                cm(self.den, rhs.den),
            );
        }
        let t = ca(cm(self.num, rhs.den / g), cm(rhs.num, self.den / g));
        if t == 0 {
            return Rat::ZERO;
        }
        let den = cm(self.den, rhs.den / g);
        // only the shared factor can survive into the numerator
        let g2 = gcd_nonzero(t.unsigned_abs(), g.unsigned_abs()) as i128;
        if g2 == 1 {
            Rat::reduced(t, den)
        } else {
            Rat::reduced(t / g2, den / g2)
        }
    }
}

impl Mul for Rat {
    type Output = Rat;
    #[inline]
    fn mul(self, rhs: Rat) -> Rat {
        if self.num == 0 || rhs.num == 0 {
            return Rat::ZERO;
        }
        if self.den == 1 && rhs.den == 1 {
            return Rat::reduced(cm(self.num, rhs.num), 1);
        }
        if self.den & (self.den - 1) == 0 && rhs.den & (rhs.den - 1) == 0 {
            // power-of-two denominators: reduce by shifting
            let d = cm(self.den, rhs.den);
            let n = cm(self.num, rhs.num);
            let shift = n.trailing_zeros().min(d.trailing_zeros());
            return Rat::reduced(n >> shift, d >> shift);
        }
        let g1 = gcd_nonzero(self.num.unsigned_abs(), rhs.den.unsigned_abs()) as i128;
        let g2 = gcd_nonzero(rhs.num.unsigned_abs(), self.den.unsigned_abs()) as i128;
        Rat::reduced(
            cm(self.num / g1, rhs.num / g2),
            cm(self.den / g2, rhs.den / g1),
        )
    }
}

impl Neg for Rat {
    type Output = Rat;
    #[inline]
    fn neg(self) -> Rat {
        Rat {
            num: self.num.checked_neg().expect(OVERFLOW),
            den: self.den,
        }
    }
}

impl Sub for Rat {
    type Output = Rat;
    #[inline]
    fn sub(self, rhs: Rat) -> Rat {
        self + (-rhs)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        self * rhs.recip()
    }
}

impl AddAssign for Rat {
    fn add_assign(&mut self, rhs: Rat) {
        *self = *self + rhs;
    }
}

impl SubAssign for Rat {
    fn sub_assign(&mut self, rhs: Rat) {
        *self = *self - rhs;
    }
}

impl MulAssign for Rat {
    fn mul_assign(&mut self, rhs: Rat) {
        *self = *self * rhs;
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        cm(self.num, other.den).cmp(&cm(other.num, self.den))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn construction_reduces() {
        assert_eq!(Rat::new(4, 6), Rat::new(2, 3));
        assert_eq!(Rat::new(-4, -6), Rat::new(2, 3));
        assert_eq!(Rat::new(4, -6), Rat::new(-2, 3));
        assert_eq!(Rat::new(0, 5), Rat::ZERO);
        assert_eq!(Rat::new(3, 1).to_string(), "3");
        assert_eq!(Rat::new(-3, 2).to_string(), "-3/2");
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-60i128..=60, 1i128..=40).prop_map(|(n, d)| Rat::new(n, d))
    }

    proptest! {
        #[test]
        fn invariants_hold(x in arb_rat(), y in arb_rat()) {
            for v in [x + y, x - y, x * y] {
                prop_assert!(v.den > 0);
                if v.num != 0 {
                    prop_assert_eq!(
                        gcd_nonzero(v.num.unsigned_abs(), v.den.unsigned_abs()),
                        1
                    );
                } else {
                    prop_assert_eq!(v.den, 1);
                }
            }
        }

        #[test]
        fn matches_reference_arithmetic(a in -40i128..=40, b in 1i128..=24,
                                        c in -40i128..=40, d in 1i128..=24) {
            let x = Rat::new(a, b);
            let y = Rat::new(c, d);
            prop_assert_eq!(x + y, Rat::new(a * d + c * b, b * d));
            prop_assert_eq!(x * y, Rat::new(a * c, b * d));
            prop_assert_eq!(x - y, Rat::new(a * d - c * b, b * d));
            if c != 0 {
                prop_assert_eq!(x / y, Rat::new(a * d, b * c));
            }
            prop_assert_eq!(x.cmp(&y), (a * d).cmp(&(c * b)));
        }
    }
}
