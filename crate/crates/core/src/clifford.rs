//! The split Clifford algebra C_{2m,0}.
//!
//! Each coordinate j contributes a forward generator e_j^+ and a backward
//! generator e_j^-, subject to {e_j^+, e_l^+} = {e_j^-, e_l^-} = 0 and
//! {e_j^+, e_l^-} = delta_jl. Blades are canonical words over the 2m
//! generators in the order e_1^+ < e_1^- < e_2^+ < ... < e_m^-, encoded as a
//! bitmask with two bits per coordinate. The ambient algebra has dimension
//! 4^m over the coefficient field.

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

pub const MAX_DIM: usize = 7;

/// Sign tag of a generator: forward (+) or backward (-).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenSign {
    Plus,
    Minus,
}

/// One of the 2m generators e_j^+/e_j^- with 1-based coordinate j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId {
    pub coord: usize,
    pub sign: GenSign,
}

impl GeneratorId {
    pub fn new(coord: usize, sign: GenSign) -> Self {
        assert!(coord >= 1 && coord <= MAX_DIM, "coordinate out of range");
        GeneratorId { coord, sign }
    }

    /// Bit position in the blade mask; forward before backward per coordinate.
    fn bit(&self) -> u32 {
        let base = 2 * (self.coord as u32 - 1);
        match self.sign {
            GenSign::Plus => base,
            GenSign::Minus => base + 1,
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.sign {
            GenSign::Plus => '+',
            GenSign::Minus => '-',
        };
        write!(f, "e{}{}", self.coord, s)
    }
}

/// Canonical word of distinct generators, as a 2m-bit mask. Bit 2(j-1) is
/// e_j^+ and bit 2(j-1)+1 is e_j^-; ascending bit order is the word order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Blade(pub u16);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_generators(gens: &[GeneratorId]) -> Result<Self> {
        let mut mask = 0u16;
        for g in gens {
            let bit = 1u16 << g.bit();
            if mask & bit != 0 {
                return Err(Error::domain(format!("repeated generator {g}")));
            }
            if (mask & !(bit - 1)) != 0 {
                return Err(Error::domain("generators out of canonical order".to_string()));
            }
            mask |= bit;
        }
        Ok(Blade(mask))
    }

    pub fn grade(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn generators(&self) -> impl Iterator<Item = GeneratorId> + '_ {
        (0..16u32).filter(|b| self.0 & (1 << b) != 0).map(|b| {
            GeneratorId {
                coord: (b / 2) as usize + 1,
                sign: if b % 2 == 0 { GenSign::Plus } else { GenSign::Minus },
            }
        })
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.generators().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Multiply the canonical word by a single generator on the right, normal
/// ordering the result. Yields at most two terms: the re-ordered insertion
/// and, when the matching partner of the opposite sign sits to the right of
/// the insertion slot, the anticommutator contraction.
fn insert_generator(word: u16, g_bit: u32) -> [(i32, Option<u16>); 2] {
    let g_mask = 1u16 << g_bit;
    let mut out = [(0, None), (0, None)];
    // Contraction fires only for a '+' generator whose '-' partner (the next
    // higher bit) is present in the word.
    if g_bit % 2 == 0 && word & (g_mask << 1) != 0 {
        let passed = (word >> (g_bit + 2)).count_ones();
        let sign = if passed % 2 == 0 { 1 } else { -1 };
        out[0] = (sign, Some(word & !(g_mask << 1)));
    }
    if word & g_mask == 0 {
        let passed = (word >> (g_bit + 1)).count_ones();
        let sign = if passed % 2 == 0 { 1 } else { -1 };
        out[1] = (sign, Some(word | g_mask));
    }
    out
}

/// Expand the normal-ordered product of two canonical words into `out`,
/// reusing the caller's buffer. Each entry is a sign and the resulting word.
/// A word has at most seven contraction partners, so 128 slots suffice.
pub fn blade_product_into(a: u16, b: u16, out: &mut Vec<(i32, u16)>) {
    out.clear();
    let mut cur = [(0i32, 0u16); 128];
    let mut nxt = [(0i32, 0u16); 128];
    let mut len = 1;
    cur[0] = (1, a);
    for gb in 0..16u32 {
        if b & (1 << gb) == 0 {
            continue;
        }
        let mut n = 0;
        for &(s, w) in &cur[..len] {
            for (s2, w2) in insert_generator(w, gb) {
                if let Some(w2) = w2 {
                    nxt[n] = (s * s2, w2);
                    n += 1;
                }
            }
        }
        if n == 0 {
            return;
        }
        cur[..n].copy_from_slice(&nxt[..n]);
        len = n;
    }
    out.extend_from_slice(&cur[..len]);
}

/// Precomputed action of multiplication by a fixed element on every blade:
/// entry b holds the canonical expansion of the product involving Blade(b).
pub type BladeTable = Vec<Vec<(u16, Coefficient)>>;

/// Table of b -> expansion of Blade(b) * w over all blades of the algebra.
pub fn right_product_table(w: &Multivector) -> BladeTable {
    let size = 4usize.pow(w.dim() as u32);
    let mut scratch = Vec::new();
    (0..size)
        .map(|b| {
            let mut entries: Vec<(u16, Coefficient)> = Vec::new();
            for (b2, c2) in w.terms() {
                blade_product_into(b as u16, b2.0, &mut scratch);
                for &(s, word) in &scratch {
                    let c = if s >= 0 { *c2 } else { -*c2 };
                    match entries.iter_mut().find(|(w0, _)| *w0 == word) {
                        Some((_, acc)) => *acc += c,
                        None => entries.push((word, c)),
                    }
                }
            }
            entries.retain(|(_, c)| !c.is_zero());
            entries.sort_unstable_by_key(|(w0, _)| *w0);
            entries
        })
        .collect()
}

/// Table of b -> expansion of w * Blade(b) over all blades of the algebra.
pub fn left_product_table(w: &Multivector) -> BladeTable {
    let size = 4usize.pow(w.dim() as u32);
    let mut scratch = Vec::new();
    (0..size)
        .map(|b| {
            let mut entries: Vec<(u16, Coefficient)> = Vec::new();
            for (b2, c2) in w.terms() {
                blade_product_into(b2.0, b as u16, &mut scratch);
                for &(s, word) in &scratch {
                    let c = if s >= 0 { *c2 } else { -*c2 };
                    match entries.iter_mut().find(|(w0, _)| *w0 == word) {
                        Some((_, acc)) => *acc += c,
                        None => entries.push((word, c)),
                    }
                }
            }
            entries.retain(|(_, c)| !c.is_zero());
            entries.sort_unstable_by_key(|(w0, _)| *w0);
            entries
        })
        .collect()
}

/// Finite Coefficient-weighted sum of blades; zero coefficients are never
/// stored, so equality is entrywise map equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multivector {
    m: usize,
    terms: BTreeMap<Blade, Coefficient>,
}

impl Multivector {
    pub fn zero(m: usize) -> Self {
        assert!(m >= 1 && m <= MAX_DIM);
        Multivector {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(m: usize, c: Coefficient) -> Self {
        let mut mv = Multivector::zero(m);
        mv.add_term(Blade::SCALAR, c);
        mv
    }

    pub fn one(m: usize) -> Self {
        Multivector::scalar(m, Coefficient::one())
    }

    pub fn generator(m: usize, g: GeneratorId) -> Self {
        assert!(g.coord <= m, "generator coordinate exceeds dimension");
        let mut mv = Multivector::zero(m);
        mv.add_term(Blade(1 << g.bit()), Coefficient::one());
        mv
    }

    pub fn from_terms(m: usize, terms: impl IntoIterator<Item = (Blade, Coefficient)>) -> Self {
        let mut mv = Multivector::zero(m);
        for (b, c) in terms {
            mv.add_term(b, c);
        }
        mv
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coeff(&self, b: Blade) -> Coefficient {
        self.terms.get(&b).copied().unwrap_or_else(Coefficient::zero)
    }

    pub fn add_term(&mut self, b: Blade, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b).or_insert_with(Coefficient::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn add(&self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.m, rhs.m, "dimension mismatch");
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.add_term(*b, *c);
        }
        out
    }

    pub fn sub(&self, rhs: &Multivector) -> Multivector {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Multivector {
        self.scale(-Coefficient::one())
    }

    pub fn scale(&self, c: Coefficient) -> Multivector {
        let mut out = Multivector::zero(self.m);
        for (b, v) in self.terms() {
            out.add_term(*b, *v * c);
        }
        out
    }

    /// Normal-ordered product, inserting the right operand one generator at
    /// a time with sign tracking and contraction terms.
    pub fn mul(&self, rhs: &Multivector) -> Multivector {
        assert_eq!(self.m, rhs.m, "dimension mismatch");
        let mut out = Multivector::zero(self.m);
        let mut scratch = Vec::new();
        for (b2, c2) in rhs.terms() {
            for (b1, c1) in self.terms() {
                blade_product_into(b1.0, b2.0, &mut scratch);
                let c = *c1 * *c2;
                for &(s, w) in &scratch {
                    let signed = if s >= 0 { c } else { -c };
                    out.add_term(Blade(w), signed);
                }
            }
        }
        out
    }

    /// e_j = e_j^+ + e_j^-; squares to 1.
    pub fn basis_vector(m: usize, j: usize) -> Multivector {
        assert!(j >= 1 && j <= m);
        let mut mv = Multivector::generator(m, GeneratorId::new(j, GenSign::Plus));
        mv.add_term(
            Blade(1 << GeneratorId::new(j, GenSign::Minus).bit()),
            Coefficient::one(),
        );
        mv
    }

    /// e_j^perp = e_j^+ - e_j^-; squares to -1.
    pub fn perp_vector(m: usize, j: usize) -> Multivector {
        assert!(j >= 1 && j <= m);
        let mut mv = Multivector::generator(m, GeneratorId::new(j, GenSign::Plus));
        mv.add_term(
            Blade(1 << GeneratorId::new(j, GenSign::Minus).bit()),
            -Coefficient::one(),
        );
        mv
    }

    /// e_j^+ ∧ e_j^- = e_j^+ e_j^- - e_j^- e_j^+.
    pub fn wedge(m: usize, j: usize) -> Multivector {
        let p = Multivector::generator(m, GeneratorId::new(j, GenSign::Plus));
        let n = Multivector::generator(m, GeneratorId::new(j, GenSign::Minus));
        p.mul(&n).sub(&n.mul(&p))
    }

    /// The four-vector driving the rotation operators, built from both of
    /// its product forms e_a e_b e_a^perp e_b^perp and -e_a^perp e_a e_b^perp e_b;
    /// their equality is asserted.
    pub fn four_vector(m: usize, a: usize, b: usize) -> Result<Multivector> {
        if a == b {
            return Err(Error::domain(format!("four_vector requires a != b, got ({a},{b})")));
        }
        assert!(a >= 1 && a <= m && b >= 1 && b <= m);
        let ea = Multivector::basis_vector(m, a);
        let eb = Multivector::basis_vector(m, b);
        let pa = Multivector::perp_vector(m, a);
        let pb = Multivector::perp_vector(m, b);
        let first = ea.mul(&eb).mul(&pa).mul(&pb);
        let second = pa.mul(&ea).mul(&pb).mul(&eb).neg();
        assert_eq!(first, second, "four-vector product forms disagree");
        Ok(first)
    }

    /// Sign with which this element commutes past both generators of
    /// coordinate j: returns s such that w·e_j^± = s·e_j^±·w exactly.
    pub fn passing_sign(&self, j: usize) -> Result<i8> {
        assert!(j >= 1 && j <= self.m);
        let mut sign: Option<i8> = None;
        for gs in [GenSign::Plus, GenSign::Minus] {
            let e = Multivector::generator(self.m, GeneratorId::new(j, gs));
            let we = self.mul(&e);
            let ew = e.mul(self);
            let plus_ok = we == ew;
            let minus_ok = we == ew.neg();
            let s = match (plus_ok, minus_ok) {
                (true, true) => continue, // both sides vanish, no constraint
                (true, false) => 1,
                (false, true) => -1,
                (false, false) => return Err(Error::NotPassable(j)),
            };
            match sign {
                None => sign = Some(s),
                Some(prev) if prev == s => {}
                Some(_) => return Err(Error::NotPassable(j)),
            }
        }
        Ok(sign.unwrap_or(1))
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| format!("({c})*{b}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Family of an idempotent factor: L-type starts from e^+e^-, M-type from e^-e^+.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    L,
    M,
}

/// Sign choice within a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorSign {
    Plus,
    Minus,
}

/// One per-coordinate factor from {L+, L-, M+, M-}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub family: Family,
    pub sign: FactorSign,
}

impl Factor {
    pub const ALL: [Factor; 4] = [
        Factor { family: Family::L, sign: FactorSign::Plus },
        Factor { family: Family::L, sign: FactorSign::Minus },
        Factor { family: Family::M, sign: FactorSign::Plus },
        Factor { family: Family::M, sign: FactorSign::Minus },
    ];

    pub const L_PLUS: Factor = Factor { family: Family::L, sign: FactorSign::Plus };
    pub const L_MINUS: Factor = Factor { family: Family::L, sign: FactorSign::Minus };
    pub const M_PLUS: Factor = Factor { family: Family::M, sign: FactorSign::Plus };
    pub const M_MINUS: Factor = Factor { family: Family::M, sign: FactorSign::Minus };

    /// Phase grading |F|: 0 for L+ and M-, 1 for L- and M+. Controls the
    /// sign picked up under right multiplication by the perp vector.
    pub fn phase_grade(&self) -> u8 {
        match (self.family, self.sign) {
            (Family::L, FactorSign::Plus) | (Family::M, FactorSign::Minus) => 0,
            _ => 1,
        }
    }

    /// Family grading ||F||: 0 for L-type, 1 for M-type.
    pub fn family_grade(&self) -> u8 {
        match self.family {
            Family::L => 0,
            Family::M => 1,
        }
    }

    /// Sign toggled within the same family.
    pub fn tilde(&self) -> Factor {
        Factor {
            family: self.family,
            sign: match self.sign {
                FactorSign::Plus => FactorSign::Minus,
                FactorSign::Minus => FactorSign::Plus,
            },
        }
    }

    /// Realize the factor at coordinate j of dimension m.
    ///
    /// Odd coordinates use the phase i on the grade-1 part, even coordinates
    /// none. In odd dimension the last coordinate mixes the two conventions:
    /// its L factors keep the phase i while its M factors drop it, exactly as
    /// the constructions in dimension 2n+1 introduce them.
    pub fn realize(&self, m: usize, j: usize) -> Multivector {
        assert!(j >= 1 && j <= m);
        let plus = Multivector::generator(m, GeneratorId::new(j, GenSign::Plus));
        let minus = Multivector::generator(m, GeneratorId::new(j, GenSign::Minus));
        let last_odd = m % 2 == 1 && j == m;
        let (body, tail, phase_i) = match self.family {
            Family::L => (plus.mul(&minus), plus.clone(), j % 2 == 1),
            Family::M => (minus.mul(&plus), minus.clone(), j % 2 == 1 && !last_odd),
        };
        let phase = if phase_i {
            Coefficient::i()
        } else {
            Coefficient::one()
        };
        let signed = match self.sign {
            FactorSign::Plus => phase,
            FactorSign::Minus => -phase,
        };
        body.add(&tail.scale(signed))
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::L => 'L',
            Family::M => 'M',
        };
        let s = match self.sign {
            FactorSign::Plus => '+',
            FactorSign::Minus => '-',
        };
        write!(f, "{fam}{s}")
    }
}

/// A per-coordinate choice of idempotent factors F = F_1 F_2 ... F_m.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdempotentSpec {
    factors: Vec<Factor>,
}

impl IdempotentSpec {
    pub fn new(factors: Vec<Factor>) -> Self {
        assert!(!factors.is_empty() && factors.len() <= MAX_DIM);
        IdempotentSpec { factors }
    }

    /// All factors L+ (the base spinor).
    pub fn all_l_plus(m: usize) -> Self {
        IdempotentSpec::new(vec![Factor::L_PLUS; m])
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factor(&self, s: usize) -> Factor {
        assert!(s >= 1 && s <= self.factors.len(), "factor index out of range");
        self.factors[s - 1]
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Toggle the sign of factor s (1-based), staying in the same family.
    pub fn tilde(&self, s: usize) -> Result<IdempotentSpec> {
        if s < 1 || s > self.factors.len() {
            return Err(Error::domain(format!("factor index {s} out of range")));
        }
        let mut factors = self.factors.clone();
        factors[s - 1] = factors[s - 1].tilde();
        Ok(IdempotentSpec { factors })
    }

    /// Toggle every factor in positions s1..=s2.
    pub fn flip_range(&self, s1: usize, s2: usize) -> Result<IdempotentSpec> {
        if !(1 <= s1 && s1 < s2 && s2 <= self.factors.len()) {
            return Err(Error::domain(format!(
                "flip range ({s1},{s2}) out of bounds for length {}",
                self.factors.len()
            )));
        }
        let mut factors = self.factors.clone();
        for f in &mut factors[s1 - 1..s2] {
            *f = f.tilde();
        }
        Ok(IdempotentSpec { factors })
    }

    /// Number of factors with a minus sign tag.
    pub fn minus_count(&self) -> usize {
        self.factors
            .iter()
            .filter(|f| f.sign == FactorSign::Minus)
            .count()
    }

    /// Product F_1 F_2 ... F_m as a multivector.
    pub fn realize(&self) -> Multivector {
        let m = self.factors.len();
        let mut out = Multivector::one(m);
        for (idx, f) in self.factors.iter().enumerate() {
            out = out.mul(&f.realize(m, idx + 1));
        }
        out
    }

    /// Parse the whitespace-separated grammar "L+ L- M+ L+".
    pub fn parse(s: &str) -> Result<IdempotentSpec> {
        let mut factors = Vec::new();
        for tok in s.split_whitespace() {
            let f = match tok {
                "L+" => Factor::L_PLUS,
                "L-" => Factor::L_MINUS,
                "M+" => Factor::M_PLUS,
                "M-" => Factor::M_MINUS,
                _ => return Err(Error::Parse(format!("bad idempotent factor {tok:?}"))),
            };
            factors.push(f);
        }
        if factors.is_empty() {
            return Err(Error::Parse("empty idempotent spec".into()));
        }
        if factors.len() > MAX_DIM {
            return Err(Error::Parse(format!(
                "spec has {} factors, supported maximum is {MAX_DIM}",
                factors.len()
            )));
        }
        Ok(IdempotentSpec { factors })
    }
}

impl fmt::Display for IdempotentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Lexicographic enumeration of all 4^m specs with L+ < L- < M+ < M-.
pub fn enumerate_specs(m: usize) -> impl Iterator<Item = IdempotentSpec> {
    assert!(m >= 1 && m <= MAX_DIM);
    let total = 4usize.pow(m as u32);
    (0..total).map(move |mut idx| {
        let mut factors = vec![Factor::L_PLUS; m];
        for slot in (0..m).rev() {
            factors[slot] = Factor::ALL[idx % 4];
            idx /= 4;
        }
        IdempotentSpec::new(factors)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Coefficient;
    use proptest::prelude::*;

    fn gen(m: usize, j: usize, s: GenSign) -> Multivector {
        Multivector::generator(m, GeneratorId::new(j, s))
    }

    #[test]
    fn car_relations_on_generators() {
        let m = 3;
        for j in 1..=m {
            for l in 1..=m {
                let pj = gen(m, j, GenSign::Plus);
                let pl = gen(m, l, GenSign::Plus);
                let nj = gen(m, j, GenSign::Minus);
                let nl = gen(m, l, GenSign::Minus);
                let anti = |x: &Multivector, y: &Multivector| x.mul(y).add(&y.mul(x));
                assert!(anti(&pj, &pl).is_zero());
                assert!(anti(&nj, &nl).is_zero());
                let expected = if j == l {
                    Multivector::one(m)
                } else {
                    Multivector::zero(m)
                };
                assert_eq!(anti(&pj, &nl), expected);
            }
        }
    }

    #[test]
    fn product_examples() {
        let m = 2;
        // e_1^- e_1^+ = 1 - e_1^+ e_1^-
        let lhs = gen(m, 1, GenSign::Minus).mul(&gen(m, 1, GenSign::Plus));
        let rhs = Multivector::one(m).sub(&gen(m, 1, GenSign::Plus).mul(&gen(m, 1, GenSign::Minus)));
        assert_eq!(lhs, rhs);
        // squares of null generators vanish
        assert!(gen(m, 1, GenSign::Plus).mul(&gen(m, 1, GenSign::Plus)).is_zero());
        // distinct coordinates anticommute: e_2^- e_1^+ = -e_1^+ e_2^-
        let lhs = gen(m, 2, GenSign::Minus).mul(&gen(m, 1, GenSign::Plus));
        let rhs = gen(m, 1, GenSign::Plus).mul(&gen(m, 2, GenSign::Minus)).neg();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn vector_squares() {
        for m in 2..=4 {
            for j in 1..=m {
                let e = Multivector::basis_vector(m, j);
                assert_eq!(e.mul(&e), Multivector::one(m), "e_{j}^2 = 1");
                let p = Multivector::perp_vector(m, j);
                assert_eq!(p.mul(&p), Multivector::one(m).neg(), "(e_{j}^perp)^2 = -1");
            }
        }
    }

    #[test]
    fn wedge_is_two_ideal_minus_one() {
        let m = 2;
        let w = Multivector::wedge(m, 1);
        let expected = gen(m, 1, GenSign::Plus)
            .mul(&gen(m, 1, GenSign::Minus))
            .scale(Coefficient::from_int(2))
            .sub(&Multivector::one(m));
        assert_eq!(w, expected);
    }

    #[test]
    fn four_vector_forms_agree() {
        // constructor asserts equality of both product forms internally
        let v = Multivector::four_vector(3, 1, 2).unwrap();
        assert!(!v.is_zero());
        assert!(Multivector::four_vector(3, 2, 2).is_err());
    }

    #[test]
    fn perp_e_absorption_on_factors() {
        // e_a^perp e_a L_a^± = L_a^±, e_a^perp e_a M_a^± = -M_a^±
        let m = 2;
        for a in 1..=m {
            let pe = Multivector::perp_vector(m, a).mul(&Multivector::basis_vector(m, a));
            for f in Factor::ALL {
                let fa = f.realize(m, a);
                let prod = pe.mul(&fa);
                let expected = if f.family == Family::L { fa } else { fa.neg() };
                assert_eq!(prod, expected, "factor {f} at coordinate {a}");
            }
        }
    }

    #[test]
    fn idempotent_examples() {
        let spec = IdempotentSpec::parse("L+ L+ L+ L+").unwrap();
        let f = spec.realize();
        assert_eq!(f.mul(&f), f);

        // L_1^+ e_1^perp = -i L_1^+
        let m = 4;
        let l1 = Factor::L_PLUS.realize(m, 1);
        let p1 = Multivector::perp_vector(m, 1);
        assert_eq!(l1.mul(&p1), l1.scale(-Coefficient::i()));

        // L_2^+ e_2^perp = -L_2^-
        let l2 = Factor::L_PLUS.realize(m, 2);
        let p2 = Multivector::perp_vector(m, 2);
        assert_eq!(l2.mul(&p2), Factor::L_MINUS.realize(m, 2).neg());
    }

    #[test]
    fn all_specs_are_idempotent() {
        for m in [2usize, 3, 4] {
            for spec in enumerate_specs(m) {
                let f = spec.realize();
                assert_eq!(f.mul(&f), f, "spec {spec} is not idempotent");
            }
        }
    }

    #[test]
    fn tilde_and_flip_range() {
        let spec = IdempotentSpec::parse("L+ L+ L+ L+").unwrap();
        assert_eq!(spec.tilde(1).unwrap().to_string(), "L- L+ L+ L+");
        let m_minus = IdempotentSpec::parse("M-").unwrap();
        assert_eq!(m_minus.tilde(1).unwrap().to_string(), "M+");
        assert_eq!(
            spec.flip_range(2, 3).unwrap().to_string(),
            "L+ L- L- L+"
        );
        assert!(spec.flip_range(3, 3).is_err());
        assert!(spec.tilde(5).is_err());

        for f in Factor::ALL {
            assert_eq!(f.tilde().phase_grade(), 1 - f.phase_grade());
            assert_eq!(f.tilde().family_grade(), f.family_grade());
        }
    }

    #[test]
    fn passing_signs() {
        let m = 2;
        let pe = Multivector::perp_vector(m, 1).mul(&Multivector::basis_vector(m, 1));
        assert_eq!(pe.passing_sign(1).unwrap(), -1);
        assert_eq!(pe.passing_sign(2).unwrap(), 1);
        let e1p = gen(m, 1, GenSign::Plus);
        assert!(matches!(e1p.passing_sign(1), Err(Error::NotPassable(1))));
        // scalars pass freely
        let s = Multivector::scalar(m, Coefficient::half());
        assert_eq!(s.passing_sign(1).unwrap(), 1);
    }

    #[test]
    fn four_vector_times_idempotent_sign() {
        // V_{a,b} F = (-1)^{1 + ||F_a|| + ||F_b||} F
        for m in [2usize, 3, 4] {
            for spec in enumerate_specs(m) {
                let f = spec.realize();
                for a in 1..=m {
                    for b in a + 1..=m {
                        let v = Multivector::four_vector(m, a, b).unwrap();
                        let parity =
                            1 + spec.factor(a).family_grade() + spec.factor(b).family_grade();
                        let expected = if parity % 2 == 0 { f.clone() } else { f.neg() };
                        assert_eq!(v.mul(&f), expected, "spec {spec}, pair ({a},{b})");
                    }
                }
            }
        }
    }

    #[test]
    fn spec_enumeration_is_lexicographic() {
        let specs: Vec<String> = enumerate_specs(2).map(|s| s.to_string()).collect();
        assert_eq!(specs.len(), 16);
        assert_eq!(specs[0], "L+ L+");
        assert_eq!(specs[1], "L+ L-");
        assert_eq!(specs[2], "L+ M+");
        assert_eq!(specs[3], "L+ M-");
        assert_eq!(specs[4], "L- L+");
        assert_eq!(specs[15], "M- M-");
    }

    fn arb_mv(m: usize) -> impl Strategy<Value = Multivector> {
        let blades = 4usize.pow(m as u32);
        proptest::collection::vec(
            ((0..blades), (-6i64..=6), (1i64..=4)),
            0..5,
        )
        .prop_map(move |terms| {
            let mut mv = Multivector::zero(m);
            for (b, n, d) in terms {
                mv.add_term(
                    Blade(b as u16),
                    Coefficient::from_rat(crate::coeff::rat(n, d)),
                );
            }
            mv
        })
    }

    proptest! {
        #[test]
        fn product_is_associative(x in arb_mv(3), y in arb_mv(3), z in arb_mv(3)) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        }

        #[test]
        fn product_distributes(x in arb_mv(2), y in arb_mv(2), z in arb_mv(2)) {
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        }
    }
}
