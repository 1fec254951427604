//! Composable linear operators on polynomials.
//!
//! Operators are small expression trees over the primitive actions; every
//! operator in the calculus (derivations, coordinate multiplication, the
//! grading operator, angular momenta, rotations and their Cartan-basis
//! combinations) is a value of this type, so suites can form sums, scalar
//! multiples and commutators uniformly.

use crate::clifford::Multivector;
use crate::coeff::Coefficient;
use crate::error::Result;
use crate::poly::Poly;

/// Blade populations up to this size get precomputed product tables on the
/// constant-multiplication primitives.
const TABLE_LIMIT: usize = 4096;

/// Right multiplication by a fixed Clifford constant, with the blade action
/// tabulated at construction for small algebras.
#[derive(Debug, Clone)]
pub struct RightFactor {
    mv: Multivector,
    table: Option<crate::clifford::BladeTable>,
}

impl PartialEq for RightFactor {
    fn eq(&self, other: &Self) -> bool {
        self.mv == other.mv
    }
}

impl RightFactor {
    pub fn new(mv: Multivector) -> Self {
        let table = (4usize.pow(mv.dim() as u32) <= TABLE_LIMIT)
            .then(|| crate::clifford::right_product_table(&mv));
        RightFactor { mv, table }
    }

    pub fn mv(&self) -> &Multivector {
        &self.mv
    }

    pub fn apply(&self, f: &Poly) -> Poly {
        match &self.table {
            Some(t) => f.right_mul_table(t),
            None => f.right_mul(&self.mv),
        }
    }
}

/// A Clifford constant together with its conjugation signs, computed once
/// at construction. A coordinate without a uniform sign stays `None` and
/// only errors when a polynomial actually carries that coordinate.
#[derive(Debug, Clone)]
pub struct PassableElement {
    mv: Multivector,
    signs: Vec<Option<i8>>,
    table: Option<crate::clifford::BladeTable>,
}

impl PartialEq for PassableElement {
    fn eq(&self, other: &Self) -> bool {
        self.mv == other.mv
    }
}

impl PassableElement {
    pub fn new(mv: Multivector) -> Self {
        let mut signs = vec![None; crate::clifford::MAX_DIM + 1];
        for (j, slot) in signs.iter_mut().enumerate().take(mv.dim() + 1).skip(1) {
            *slot = mv.passing_sign(j).ok();
        }
        let table = (4usize.pow(mv.dim() as u32) <= TABLE_LIMIT)
            .then(|| crate::clifford::left_product_table(&mv));
        PassableElement { mv, signs, table }
    }

    pub fn mv(&self) -> &Multivector {
        &self.mv
    }

    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        match &self.table {
            Some(t) => f.left_mul_signed_table(&self.signs, t),
            None => f.left_mul_signed(&self.mv, &self.signs),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum OperatorExpr {
    Zero,
    /// Left multiplication by the coordinate variable of coordinate j.
    XiMul(usize),
    /// The derivation of coordinate j.
    DApply(usize),
    /// Right multiplication by a Clifford constant.
    RightMul(RightFactor),
    /// Left multiplication by a passable Clifford constant.
    LeftMulPassable(PassableElement),
    /// Scalar multiple of the identity.
    Scale(Coefficient),
    Sum(Vec<OperatorExpr>),
    /// Composition; the last element applies first.
    Compose(Vec<OperatorExpr>),
}

impl OperatorExpr {
    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        match self {
            OperatorExpr::Zero => Ok(Poly::zero(f.dim())),
            OperatorExpr::XiMul(j) => Ok(f.xi_mul(*j)),
            OperatorExpr::DApply(j) => Ok(f.d_apply(*j)),
            OperatorExpr::RightMul(w) => Ok(w.apply(f)),
            OperatorExpr::LeftMulPassable(w) => w.apply(f),
            OperatorExpr::Scale(c) => Ok(f.scale(*c)),
            OperatorExpr::Sum(parts) => {
                let mut out = Poly::zero(f.dim());
                for p in parts {
                    out = out.add(&p.apply(f)?);
                }
                Ok(out)
            }
            OperatorExpr::Compose(parts) => {
                let mut cur = f.clone();
                for p in parts.iter().rev() {
                    cur = p.apply(&cur)?;
                }
                Ok(cur)
            }
        }
    }

    pub fn scaled(self, c: Coefficient) -> OperatorExpr {
        OperatorExpr::Compose(vec![OperatorExpr::Scale(c), self])
    }

    pub fn plus(self, other: OperatorExpr) -> OperatorExpr {
        OperatorExpr::Sum(vec![self, other])
    }

    /// a then b applied after it.
    pub fn after(self, first: OperatorExpr) -> OperatorExpr {
        OperatorExpr::Compose(vec![self, first])
    }

    /// Commutator [a, b] as an operator value.
    pub fn commutator(a: &OperatorExpr, b: &OperatorExpr) -> OperatorExpr {
        OperatorExpr::Sum(vec![
            OperatorExpr::Compose(vec![a.clone(), b.clone()]),
            OperatorExpr::Compose(vec![b.clone(), a.clone()])
                .scaled(-Coefficient::one()),
        ])
    }

    /// Evaluate [a, b] on a polynomial without building the tree.
    pub fn commutator_apply(a: &OperatorExpr, b: &OperatorExpr, f: &Poly) -> Result<Poly> {
        let ab = a.apply(&b.apply(f)?)?;
        let ba = b.apply(&a.apply(f)?)?;
        Ok(ab.sub(&ba))
    }

    /// Anticommutator {a, b} evaluated on a polynomial.
    pub fn anticommutator_apply(a: &OperatorExpr, b: &OperatorExpr, f: &Poly) -> Result<Poly> {
        let ab = a.apply(&b.apply(f)?)?;
        let ba = b.apply(&a.apply(f)?)?;
        Ok(ab.add(&ba))
    }
}

/// Angular momentum operator: x_a d_b + x_b d_a, zero on the diagonal.
pub fn angular_op(a: usize, b: usize) -> OperatorExpr {
    if a == b {
        return OperatorExpr::Zero;
    }
    OperatorExpr::Sum(vec![
        OperatorExpr::Compose(vec![OperatorExpr::XiMul(a), OperatorExpr::DApply(b)]),
        OperatorExpr::Compose(vec![OperatorExpr::XiMul(b), OperatorExpr::DApply(a)]),
    ])
}

/// First-order operator: sum of all coordinate derivations.
pub fn dirac_op(m: usize) -> OperatorExpr {
    OperatorExpr::Sum((1..=m).map(OperatorExpr::DApply).collect())
}

/// Left multiplication by the full vector variable.
pub fn xi_op(m: usize) -> OperatorExpr {
    OperatorExpr::Sum((1..=m).map(OperatorExpr::XiMul).collect())
}

/// Grading operator as the composed form sum_j x_j d_j.
pub fn euler_op(m: usize) -> OperatorExpr {
    OperatorExpr::Sum(
        (1..=m)
            .map(|j| OperatorExpr::Compose(vec![OperatorExpr::XiMul(j), OperatorExpr::DApply(j)]))
            .collect(),
    )
}

/// Second-order operator, defined as the square of the first-order one.
pub fn laplace_op(m: usize) -> OperatorExpr {
    OperatorExpr::Compose(vec![dirac_op(m), dirac_op(m)])
}

/// Grading operator shifted by m/2; the center of the invariance algebra.
pub fn euler_shifted_op(m: usize) -> OperatorExpr {
    euler_op(m).plus(OperatorExpr::Scale(Coefficient::from_rat(
        crate::coeff::rat(m as i64, 2),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{monogenic_generator, monomials_up_to_degree, Poly};
    use crate::coeff::Coefficient;
    use crate::clifford::Blade;

    #[test]
    fn angular_on_generators() {
        let m = 4;
        for k in 0..=5 {
            let g = monogenic_generator(k, m);
            // the first angular momentum scales the generator by -k
            let l12 = angular_op(1, 2).apply(&g).unwrap();
            assert_eq!(l12, g.scale(Coefficient::from_int(-(k as i64))));
            // disjoint coordinates annihilate it
            assert!(angular_op(3, 4).apply(&g).unwrap().is_zero());
            // diagonal is the zero operator
            assert!(angular_op(1, 1).apply(&g).unwrap().is_zero());
        }
    }

    #[test]
    fn operator_forms_match_direct_actions() {
        let m = 3;
        for exps in monomials_up_to_degree(m, 3) {
            let f = Poly::term(m, exps, Blade::SCALAR, Coefficient::one());
            assert_eq!(dirac_op(m).apply(&f).unwrap(), f.dirac());
            assert_eq!(euler_op(m).apply(&f).unwrap(), f.euler());
            assert_eq!(
                laplace_op(m).apply(&f).unwrap(),
                f.dirac().dirac()
            );
        }
    }

    #[test]
    fn commutator_tree_matches_eval() {
        let m = 2;
        let a = dirac_op(m);
        let b = xi_op(m);
        let f = monogenic_generator(2, m);
        let tree = OperatorExpr::commutator(&a, &b).apply(&f).unwrap();
        let eval = OperatorExpr::commutator_apply(&a, &b, &f).unwrap();
        assert_eq!(tree, eval);
    }
}
