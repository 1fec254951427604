//! Discrete Clifford-valued polynomials.
//!
//! A polynomial is a finite sum of terms: an ordered monomial in the
//! coordinate variable operators applied to the ground state, followed by a
//! right Clifford coefficient. The coordinate variables anticommute pairwise
//! and interact with the per-coordinate derivations through the skew Weyl
//! relation d_j x_j - x_j d_j = 1, which fixes the closed-form actions
//! implemented here without ever touching grid coordinates.

use crate::clifford::{Blade, GenSign, GeneratorId, Multivector};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use std::fmt;

/// Exponent vector of an ordered monomial, packed 8 bits per coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector {
    packed: u64,
}

impl ExponentVector {
    pub fn zero() -> Self {
        ExponentVector { packed: 0 }
    }

    pub fn from_slice(alpha: &[u8]) -> Self {
        assert!(alpha.len() <= 7);
        let mut packed = 0u64;
        for (i, &a) in alpha.iter().enumerate() {
            packed |= (a as u64) << (8 * i);
        }
        ExponentVector { packed }
    }

    /// Exponent of coordinate j (1-based).
    pub fn get(&self, j: usize) -> u8 {
        ((self.packed >> (8 * (j - 1))) & 0xff) as u8
    }

    pub fn raised(&self, j: usize) -> Self {
        let cur = self.get(j);
        assert!(cur < u8::MAX, "exponent overflow");
        ExponentVector {
            packed: self.packed + (1u64 << (8 * (j - 1))),
        }
    }

    pub fn lowered(&self, j: usize) -> Option<Self> {
        if self.get(j) == 0 {
            None
        } else {
            Some(ExponentVector {
                packed: self.packed - (1u64 << (8 * (j - 1))),
            })
        }
    }

    pub fn degree(&self) -> u32 {
        (0..8).map(|i| ((self.packed >> (8 * i)) & 0xff) as u32).sum()
    }

    /// Sum of exponents of coordinates strictly below j; its parity is the
    /// sign picked up when an anticommuting symbol crosses the prefix.
    pub fn prefix_degree(&self, j: usize) -> u32 {
        (0..j - 1)
            .map(|i| ((self.packed >> (8 * i)) & 0xff) as u32)
            .sum()
    }
}

/// Monomial key: exponent vector plus right blade.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exps: ExponentVector,
    pub blade: Blade,
}

/// Finite sum of monomial terms, kept sorted by monomial with no zero
/// coefficients, so equality is plain structural equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    m: usize,
    terms: Vec<(Monomial, Coefficient)>,
}

/// Sort a raw term list and combine duplicates, dropping zeros. The sort
/// runs on compact key/index pairs; coefficients are gathered afterwards.
fn canonicalize(terms: Vec<(Monomial, Coefficient)>) -> Vec<(Monomial, Coefficient)> {
    if terms.len() <= 1 {
        return terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    }
    let mut order: Vec<(Monomial, u32)> = terms
        .iter()
        .enumerate()
        .map(|(i, (k, _))| (*k, i as u32))
        .collect();
    order.sort_unstable();
    let mut out: Vec<(Monomial, Coefficient)> = Vec::with_capacity(terms.len());
    for (k, i) in order {
        let c = terms[i as usize].1;
        match out.last_mut() {
            Some((lk, lc)) if *lk == k => {
                *lc += c;
                if lc.is_zero() {
                    out.pop();
                }
            }
            _ => {
                if !c.is_zero() {
                    out.push((k, c));
                }
            }
        }
    }
    out
}

impl Poly {
    pub fn zero(m: usize) -> Self {
        assert!(m >= 1 && m <= crate::clifford::MAX_DIM);
        Poly {
            m,
            terms: Vec::new(),
        }
    }

    /// The ground state with scalar right coefficient 1.
    pub fn one(m: usize) -> Self {
        Poly::term(
            m,
            ExponentVector::zero(),
            Blade::SCALAR,
            Coefficient::one(),
        )
    }

    pub fn term(m: usize, exps: ExponentVector, blade: Blade, c: Coefficient) -> Self {
        let mut p = Poly::zero(m);
        p.add_term(Monomial { exps, blade }, c);
        p
    }

    /// Build from an unsorted raw term list, combining duplicates.
    pub fn from_raw(m: usize, raw: Vec<(Monomial, Coefficient)>) -> Self {
        Poly {
            m,
            terms: canonicalize(raw),
        }
    }

    /// The ground state carrying a whole multivector as right coefficient.
    pub fn constant(m: usize, w: &Multivector) -> Self {
        assert_eq!(m, w.dim());
        // blade iteration order matches the monomial order at degree zero
        Poly {
            m,
            terms: w
                .terms()
                .map(|(b, c)| {
                    (
                        Monomial {
                            exps: ExponentVector::zero(),
                            blade: *b,
                        },
                        *c,
                    )
                })
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter().map(|(k, c)| (k, c))
    }

    pub fn coeff(&self, key: &Monomial) -> Coefficient {
        match self.terms.binary_search_by_key(key, |(k, _)| *k) {
            Ok(i) => self.terms[i].1,
            Err(_) => Coefficient::zero(),
        }
    }

    pub fn first_term(&self) -> Option<(&Monomial, &Coefficient)> {
        self.terms.first().map(|(k, c)| (k, c))
    }

    pub fn add_term(&mut self, key: Monomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.binary_search_by_key(&key, |(k, _)| *k) {
            Ok(i) => {
                self.terms[i].1 += c;
                if self.terms[i].1.is_zero() {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, (key, c)),
        }
    }

    /// Merge of two sorted term lists.
    pub fn add(&self, rhs: &Poly) -> Poly {
        assert_eq!(self.m, rhs.m);
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ka, ca) = self.terms[i];
            let (kb, cb) = rhs.terms[j];
            match ka.cmp(&kb) {
                std::cmp::Ordering::Less => {
                    out.push((ka, ca));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((kb, cb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((ka, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        Poly { m: self.m, terms: out }
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            m: self.m,
            terms: self.terms.iter().map(|(k, c)| (*k, -*c)).collect(),
        }
    }

    /// Scalar multiple; scaling by a nonzero field element keeps every term.
    pub fn scale(&self, c: Coefficient) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.m);
        }
        Poly {
            m: self.m,
            terms: self.terms.iter().map(|(k, v)| (*k, *v * c)).collect(),
        }
    }

    /// Degree shared by every term, when the polynomial is homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.exps.degree();
        it.all(|(k, _)| k.exps.degree() == first).then_some(first)
    }

    /// Left multiplication by the coordinate variable of coordinate j:
    /// the variable anticommutes past the leading exponents, then stacks.
    /// Raising an exponent shifts every key by the same amount, so the
    /// term order is preserved.
    pub fn xi_mul(&self, j: usize) -> Poly {
        assert!(j >= 1 && j <= self.m);
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let v = if k.exps.prefix_degree(j) % 2 == 0 {
                    *c
                } else {
                    -*c
                };
                (
                    Monomial {
                        exps: k.exps.raised(j),
                        blade: k.blade,
                    },
                    v,
                )
            })
            .collect();
        Poly { m: self.m, terms }
    }

    /// The derivation of coordinate j in closed form: the skew Weyl relation
    /// gives d_j x_j^k [1] = k x_j^{k-1} [1], and crossing a foreign variable
    /// flips the sign. Order-preserving for the same reason as `xi_mul`.
    pub fn d_apply(&self, j: usize) -> Poly {
        assert!(j >= 1 && j <= self.m);
        let terms = self
            .terms
            .iter()
            .filter_map(|(k, c)| {
                let lowered = k.exps.lowered(j)?;
                let mult = Coefficient::from_int(k.exps.get(j) as i64);
                let v = if k.exps.prefix_degree(j) % 2 == 0 {
                    *c
                } else {
                    -*c
                };
                Some((
                    Monomial {
                        exps: lowered,
                        blade: k.blade,
                    },
                    v * mult,
                ))
            })
            .collect();
        Poly { m: self.m, terms }
    }

    /// The full first-order operator: sum of all coordinate derivations.
    /// Lowers homogeneous degree by one; its kernel is the monogenics.
    pub fn dirac(&self) -> Poly {
        let mut out = Poly::zero(self.m);
        for j in 1..=self.m {
            out = out.add(&self.d_apply(j));
        }
        out
    }

    /// Grading operator: multiplies each term by its degree.
    pub fn euler(&self) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter_map(|(k, c)| {
                let d = k.exps.degree();
                (d > 0).then(|| (*k, *c * Coefficient::from_int(d as i64)))
            })
            .collect();
        Poly { m: self.m, terms }
    }

    /// Replace each term's right blade B by the expansion of B·w.
    pub fn right_mul(&self, w: &Multivector) -> Poly {
        assert_eq!(self.m, w.dim());
        let mut raw = Vec::with_capacity(self.terms.len() * 2);
        let mut scratch = Vec::new();
        for (k, c) in &self.terms {
            for (b2, c2) in w.terms() {
                crate::clifford::blade_product_into(k.blade.0, b2.0, &mut scratch);
                let cc = *c * *c2;
                for &(s, word) in &scratch {
                    raw.push((
                        Monomial {
                            exps: k.exps,
                            blade: Blade(word),
                        },
                        if s >= 0 { cc } else { -cc },
                    ));
                }
            }
        }
        Poly {
            m: self.m,
            terms: canonicalize(raw),
        }
    }

    /// Left multiplication by a Clifford constant that conjugates to a pure
    /// sign on every coordinate present in the polynomial: the constant is
    /// passed through the variables picking up those signs, then absorbed
    /// into the right coefficient.
    pub fn left_mul_passable(&self, w: &Multivector) -> Result<Poly> {
        assert_eq!(self.m, w.dim());
        let mut signs = [None; crate::clifford::MAX_DIM + 1];
        for j in 1..=self.m {
            if self.terms.iter().any(|(k, _)| k.exps.get(j) > 0) {
                signs[j] = Some(w.passing_sign(j)?);
            }
        }
        self.left_mul_signed(w, &signs)
    }

    /// Right multiplication through a precomputed blade table.
    pub fn right_mul_table(&self, table: &crate::clifford::BladeTable) -> Poly {
        let mut raw = Vec::with_capacity(self.terms.len() * 2);
        for (k, c) in &self.terms {
            for &(word, c2) in &table[k.blade.0 as usize] {
                raw.push((
                    Monomial {
                        exps: k.exps,
                        blade: Blade(word),
                    },
                    *c * c2,
                ));
            }
        }
        Poly {
            m: self.m,
            terms: canonicalize(raw),
        }
    }

    /// Passable left multiplication through a precomputed blade table.
    pub fn left_mul_signed_table(
        &self,
        signs: &[Option<i8>],
        table: &crate::clifford::BladeTable,
    ) -> Result<Poly> {
        let mut raw = Vec::with_capacity(self.terms.len() * 2);
        for (k, c) in &self.terms {
            let mut flips = 0u32;
            for j in 1..=self.m {
                let e = k.exps.get(j) as u32;
                if e == 0 {
                    continue;
                }
                match signs[j] {
                    Some(s) if s < 0 => flips += e,
                    Some(_) => {}
                    None => return Err(Error::NotPassable(j)),
                }
            }
            let v = if flips % 2 == 0 { *c } else { -*c };
            for &(word, c2) in &table[k.blade.0 as usize] {
                raw.push((
                    Monomial {
                        exps: k.exps,
                        blade: Blade(word),
                    },
                    v * c2,
                ));
            }
        }
        Ok(Poly {
            m: self.m,
            terms: canonicalize(raw),
        })
    }

    /// Passable left multiplication with conjugation signs already known;
    /// a missing sign errors only when that coordinate actually occurs.
    pub fn left_mul_signed(
        &self,
        w: &Multivector,
        signs: &[Option<i8>],
    ) -> Result<Poly> {
        assert_eq!(self.m, w.dim());
        let mut raw = Vec::with_capacity(self.terms.len() * 2);
        let mut scratch = Vec::new();
        for (k, c) in &self.terms {
            let mut flips = 0u32;
            for j in 1..=self.m {
                let e = k.exps.get(j) as u32;
                if e == 0 {
                    continue;
                }
                match signs[j] {
                    Some(s) if s < 0 => flips += e,
                    Some(_) => {}
                    None => return Err(Error::NotPassable(j)),
                }
            }
            let v = if flips % 2 == 0 { *c } else { -*c };
            for (b2, c2) in w.terms() {
                crate::clifford::blade_product_into(b2.0, k.blade.0, &mut scratch);
                let cc = v * *c2;
                for &(s, word) in &scratch {
                    raw.push((
                        Monomial {
                            exps: k.exps,
                            blade: Blade(word),
                        },
                        if s >= 0 { cc } else { -cc },
                    ));
                }
            }
        }
        Ok(Poly {
            m: self.m,
            terms: canonicalize(raw),
        })
    }
}

/// Leading factor of the alternating generator sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeadFactor {
    /// Leftmost factor is the difference of the first two variables.
    Diff,
    /// Leftmost factor is their sum.
    Sum,
}

/// Alternating product of (x2 - x1) and (x2 + x1), k factors applied to the
/// ground state, with the given leading factor. The difference-led sequence
/// is annihilated by the first-order operator at every degree.
pub fn alternating_generator(k: usize, m: usize, lead: LeadFactor) -> Poly {
    assert!(m >= 2, "generators use the first two coordinates");
    let mut p = Poly::one(m);
    // factors apply right-to-left; factor t (1-based from the left) is the
    // lead kind for odd t and the opposite kind for even t
    for t in (1..=k).rev() {
        let is_lead = t % 2 == 1;
        let diff = match (lead, is_lead) {
            (LeadFactor::Diff, true) | (LeadFactor::Sum, false) => true,
            _ => false,
        };
        let x2 = p.xi_mul(2);
        let x1 = p.xi_mul(1);
        p = if diff { x2.sub(&x1) } else { x2.add(&x1) };
    }
    p
}

/// The degree-k basic monogenic generator.
pub fn monogenic_generator(k: usize, m: usize) -> Poly {
    alternating_generator(k, m, LeadFactor::Diff)
}

/// The sum-led partner sequence of the basic monogenic generator.
pub fn partner_generator(k: usize, m: usize) -> Poly {
    alternating_generator(k, m, LeadFactor::Sum)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (k, c) in &self.terms {
            let mut mono = String::new();
            for j in 1..=self.m {
                let a = k.exps.get(j);
                if a == 1 {
                    mono.push_str(&format!("x{j} "));
                } else if a > 1 {
                    mono.push_str(&format!("x{j}^{a} "));
                }
            }
            parts.push(format!("({c}) * {mono}[1] | {}", k.blade));
        }
        f.write_str(&parts.join(" + "))
    }
}

/// Parse a blade rendering: "1" or space-separated generators "e1+ e2-".
pub fn parse_blade(s: &str) -> Result<Blade> {
    let s = s.trim();
    if s == "1" {
        return Ok(Blade::SCALAR);
    }
    let mut gens = Vec::new();
    for tok in s.split_whitespace() {
        let body = tok
            .strip_prefix('e')
            .ok_or_else(|| Error::Parse(format!("bad generator {tok:?}")))?;
        let sign = if body.ends_with('+') {
            GenSign::Plus
        } else if body.ends_with('-') {
            GenSign::Minus
        } else {
            return Err(Error::Parse(format!("bad generator {tok:?}")));
        };
        let coord: usize = body[..body.len() - 1]
            .parse()
            .map_err(|_| Error::Parse(format!("bad generator {tok:?}")))?;
        if coord < 1 || coord > crate::clifford::MAX_DIM {
            return Err(Error::Parse(format!("coordinate out of range in {tok:?}")));
        }
        gens.push(GeneratorId::new(coord, sign));
    }
    Blade::from_generators(&gens)
}

/// Parse the textual polynomial form produced by `Display`.
pub fn parse_poly(s: &str, m: usize) -> Result<Poly> {
    let s = s.trim();
    if s == "0" {
        return Ok(Poly::zero(m));
    }
    let mut out = Poly::zero(m);
    let mut rest = s;
    loop {
        if !rest.starts_with('(') {
            return Err(Error::Parse(format!("expected '(' at {rest:?}")));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Parse("unclosed coefficient".into()))?;
        let coeff = Coefficient::parse(&rest[1..close])?;
        let after = rest[close + 1..]
            .strip_prefix(" * ")
            .ok_or_else(|| Error::Parse("expected ' * ' after coefficient".into()))?;
        // the next term starts at " + (" if present
        let (body, tail) = match after.find(" + (") {
            Some(pos) => (&after[..pos], Some(&after[pos + 3..])),
            None => (after, None),
        };
        let (mono_text, blade_text) = body
            .split_once(" | ")
            .ok_or_else(|| Error::Parse("expected ' | ' before blade".into()))?;
        let mono_text = mono_text
            .trim()
            .strip_suffix("[1]")
            .ok_or_else(|| Error::Parse("expected ground state marker [1]".into()))?;
        let mut alpha = [0u8; 7];
        for tok in mono_text.split_whitespace() {
            let body = tok
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("bad variable {tok:?}")))?;
            let (j_text, a_text) = match body.split_once('^') {
                Some((j, a)) => (j, a),
                None => (body, "1"),
            };
            let j: usize = j_text
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable {tok:?}")))?;
            let a: u8 = a_text
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent {tok:?}")))?;
            if j < 1 || j > m {
                return Err(Error::Parse(format!("variable x{j} outside dimension {m}")));
            }
            alpha[j - 1] = alpha[j - 1]
                .checked_add(a)
                .ok_or_else(|| Error::Parse("exponent overflow".into()))?;
        }
        let blade = parse_blade(blade_text)?;
        out.add_term(
            Monomial {
                exps: ExponentVector::from_slice(&alpha),
                blade,
            },
            coeff,
        );
        match tail {
            Some(t) => rest = t,
            None => break,
        }
    }
    Ok(out)
}

/// Monomials of exact degree k in m variables, in deterministic order.
pub fn monomials_of_degree(m: usize, k: usize) -> Vec<ExponentVector> {
    fn rec(m: usize, k: usize, slot: usize, cur: &mut [u8; 7], out: &mut Vec<ExponentVector>) {
        if slot == m - 1 {
            cur[slot] = k as u8;
            out.push(ExponentVector::from_slice(&cur[..m]));
            return;
        }
        for a in 0..=k {
            cur[slot] = a as u8;
            rec(m, k - a, slot + 1, cur, out);
        }
    }
    let mut out = Vec::new();
    let mut cur = [0u8; 7];
    rec(m, k, 0, &mut cur, &mut out);
    out
}

/// Monomials of degree at most d.
pub fn monomials_up_to_degree(m: usize, d: usize) -> Vec<ExponentVector> {
    (0..=d).flat_map(|k| monomials_of_degree(m, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Factor;
    use crate::coeff::rat;
    use proptest::prelude::*;

    fn xi_pow(m: usize, j: usize, k: usize) -> Poly {
        let mut p = Poly::one(m);
        for _ in 0..k {
            p = p.xi_mul(j);
        }
        p
    }

    #[test]
    fn xi_mul_examples() {
        let m = 2;
        // x1 stacking
        let p = xi_pow(m, 1, 2);
        assert_eq!(p.to_string(), "(1) * x1^2 [1] | 1");
        // canonical insertion at the front keeps sign +1
        let q = Poly::one(m).xi_mul(2).xi_mul(1);
        assert_eq!(q.to_string(), "(1) * x1 x2 [1] | 1");
        // crossing the first variable flips the sign
        let r = Poly::one(m).xi_mul(1).xi_mul(2);
        assert_eq!(r.to_string(), "(-1) * x1 x2 [1] | 1");
    }

    #[test]
    fn derivation_examples() {
        let m = 2;
        // power rule on the acting coordinate
        let p = xi_pow(m, 1, 3);
        assert_eq!(p.d_apply(1), xi_pow(m, 1, 2).scale(Coefficient::from_int(3)));
        // foreign coordinate annihilates
        assert!(p.d_apply(2).is_zero());
        // crossing sign: d_2 (x1 x2 [1]) = -x1 [1]
        let q = Poly::one(m).xi_mul(2).xi_mul(1);
        assert_eq!(q.d_apply(2), xi_pow(m, 1, 1).neg());
    }

    #[test]
    fn dirac_examples() {
        let m = 2;
        assert!(monogenic_generator(1, m).dirac().is_zero());
        for k in 0..=6 {
            assert!(
                monogenic_generator(k, m).dirac().is_zero(),
                "generator of degree {k} is not monogenic"
            );
        }
        assert_eq!(
            xi_pow(m, 1, 2).dirac(),
            xi_pow(m, 1, 1).scale(Coefficient::from_int(2))
        );
        // second order: applied to x_j^2 [1] gives 2 [1] for every j
        for j in 1..=m {
            assert_eq!(
                xi_pow(m, j, 2).dirac().dirac(),
                Poly::one(m).scale(Coefficient::from_int(2))
            );
        }
    }

    #[test]
    fn euler_examples() {
        let m = 2;
        assert!(Poly::one(m).euler().is_zero());
        let p = xi_pow(m, 1, 2).xi_mul(2); // degree 3 monomial
        assert_eq!(p.euler(), p.scale(Coefficient::from_int(3)));
        let g3 = monogenic_generator(3, m);
        assert_eq!(g3.euler(), g3.scale(Coefficient::from_int(3)));
        // the grading operator equals the composed form sum_j x_j d_j
        let composed = |f: &Poly| {
            let mut out = Poly::zero(f.dim());
            for j in 1..=f.dim() {
                out = out.add(&f.d_apply(j).xi_mul(j));
            }
            out
        };
        for k in 0..=4 {
            let g = monogenic_generator(k, m);
            assert_eq!(g.euler(), composed(&g));
        }
    }

    #[test]
    fn generator_expansions() {
        let m = 2;
        let g1 = monogenic_generator(1, m);
        let expected = Poly::one(m).xi_mul(2).sub(&Poly::one(m).xi_mul(1));
        assert_eq!(g1, expected);

        let g2 = monogenic_generator(2, m);
        let mut expect = xi_pow(m, 1, 2).neg();
        expect = expect.add(&xi_pow(m, 2, 2));
        expect = expect.add(
            &Poly::one(m)
                .xi_mul(2)
                .xi_mul(1)
                .scale(Coefficient::from_int(-2)),
        );
        assert_eq!(g2, expect);
    }

    #[test]
    fn generator_recursion_and_derivatives() {
        let m = 2;
        for k in 1..=6 {
            let g = monogenic_generator(k, m);
            let f_prev = partner_generator(k - 1, m);
            // leading difference factor applied to the partner gives the generator
            let rebuilt = f_prev.xi_mul(2).sub(&f_prev.xi_mul(1));
            assert_eq!(rebuilt, g);
            // d_j of the generator is (-1)^j k times the partner one degree down
            let kc = Coefficient::from_int(k as i64);
            assert_eq!(g.d_apply(1), f_prev.scale(-kc));
            assert_eq!(g.d_apply(2), f_prev.scale(kc));
        }
    }

    #[test]
    fn right_mul_examples() {
        let m = 2;
        let f = Poly::constant(m, &Factor::L_PLUS.realize(m, 1));
        // right multiplication by the perp vector of an odd coordinate
        let perp = Multivector::perp_vector(m, 1);
        assert_eq!(f.right_mul(&perp), f.scale(-Coefficient::i()));
        // identity
        assert_eq!(f.right_mul(&Multivector::one(m)), f);
        // even coordinate flips the factor sign
        let f2 = Poly::constant(m, &Factor::L_PLUS.realize(m, 2));
        let expect = Poly::constant(m, &Factor::L_MINUS.realize(m, 2)).neg();
        assert_eq!(f2.right_mul(&Multivector::perp_vector(m, 2)), expect);
    }

    #[test]
    fn left_mul_passable_examples() {
        let m = 2;
        let v12 = Multivector::four_vector(m, 1, 2).unwrap();
        for k in 0..=4 {
            for spec_text in ["L+ L+", "M+ L-", "M- M+"] {
                let spec = crate::clifford::IdempotentSpec::parse(spec_text).unwrap();
                let gk = monogenic_generator(k, m);
                let gkf = gk.right_mul(&spec.realize());
                // passing the four-vector through the generator costs (-1)^k
                let lhs = gkf.left_mul_passable(&v12).unwrap();
                let rhs = gk.right_mul(&v12.mul(&spec.realize()));
                let rhs = if k % 2 == 0 { rhs } else { rhs.neg() };
                assert_eq!(lhs, rhs, "k={k}, spec={spec_text}");
            }
        }
        // scalars pass freely
        let c = Multivector::scalar(m, Coefficient::half());
        let p = xi_pow(m, 1, 3);
        assert_eq!(p.left_mul_passable(&c).unwrap(), p.scale(Coefficient::half()));
        // a bare generator is not passable
        let e1p = Multivector::generator(m, GeneratorId::new(1, GenSign::Plus));
        assert!(matches!(
            xi_pow(m, 1, 1).left_mul_passable(&e1p),
            Err(Error::NotPassable(1))
        ));
    }

    #[test]
    fn right_and_passable_left_commute() {
        let m = 2;
        let v12 = Multivector::four_vector(m, 1, 2).unwrap();
        let w = Multivector::perp_vector(m, 1).mul(&Multivector::perp_vector(m, 2));
        let p = monogenic_generator(3, m).right_mul(&Factor::M_PLUS.realize(m, 1));
        let a = p.left_mul_passable(&v12).unwrap().right_mul(&w);
        let b = p.right_mul(&w).left_mul_passable(&v12).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn skew_weyl_on_low_degrees() {
        let m = 3;
        for exps in monomials_up_to_degree(m, 4) {
            let f = Poly::term(m, exps, Blade::SCALAR, Coefficient::one());
            for j in 1..=m {
                let lhs = f.xi_mul(j).d_apply(j).sub(&f.d_apply(j).xi_mul(j));
                assert_eq!(lhs, f, "skew Weyl fails at j={j}");
            }
            for j in 1..=m {
                for l in 1..=m {
                    if j == l {
                        continue;
                    }
                    let anti_xx = f.xi_mul(l).xi_mul(j).add(&f.xi_mul(j).xi_mul(l));
                    let anti_dd = f.d_apply(l).d_apply(j).add(&f.d_apply(j).d_apply(l));
                    let anti_dx = f.xi_mul(l).d_apply(j).add(&f.d_apply(j).xi_mul(l));
                    assert!(anti_xx.is_zero() && anti_dd.is_zero() && anti_dx.is_zero());
                }
            }
        }
    }

    #[test]
    fn degree_behavior() {
        let m = 3;
        for exps in monomials_of_degree(m, 3) {
            let f = Poly::term(m, exps, Blade(0b100), Coefficient::one());
            assert_eq!(f.homogeneous_degree(), Some(3));
            let df = f.dirac();
            if !df.is_zero() {
                assert_eq!(df.homogeneous_degree(), Some(2));
            }
            // angular momenta preserve degree
            let l = crate::op::angular_op(1, 2).apply(&f).unwrap();
            if !l.is_zero() {
                assert_eq!(l.homogeneous_degree(), Some(3));
            }
        }
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(2, 3).len(), 4);
        assert_eq!(monomials_of_degree(4, 2).len(), 10);
        assert_eq!(monomials_up_to_degree(4, 4).len(), 70);
    }

    fn arb_poly(m: usize) -> impl Strategy<Value = Poly> {
        let blades = 4usize.pow(m as u32);
        proptest::collection::vec(
            (
                proptest::collection::vec(0u8..4, m),
                0..blades,
                (-9i64..=9),
                (1i64..=4),
            ),
            0..5,
        )
        .prop_map(move |terms| {
            let mut p = Poly::zero(m);
            for (alpha, b, n, d) in terms {
                p.add_term(
                    Monomial {
                        exps: ExponentVector::from_slice(&alpha),
                        blade: Blade(b as u16),
                    },
                    Coefficient::from_rat(rat(n, d)),
                );
            }
            p
        })
    }

    proptest! {
        #[test]
        fn poly_display_round_trip(p in arb_poly(3)) {
            let text = p.to_string();
            prop_assert_eq!(parse_poly(&text, 3).unwrap(), p);
        }
    }
}
