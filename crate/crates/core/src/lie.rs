//! The orthogonal Lie algebra realization on discrete polynomials:
//! rotation generators, Cartan subalgebra and root vectors, weight
//! extraction, highest-weight testing, idempotent classification and
//! spinor-orbit closure.

use crate::clifford::{enumerate_specs, IdempotentSpec, Multivector};
use crate::coeff::{rat, rat_to_string, Coefficient, Rat};
use crate::error::{Error, Result};
use crate::linalg::Span;
use crate::op::{angular_op, OperatorExpr};
use crate::poly::{monogenic_generator, Poly};
use std::collections::HashMap;
use std::fmt;

/// Rank of the algebra acting in dimension m.
pub fn rank(m: usize) -> usize {
    m / 2
}

/// Rotation generator dR(e_{a,b}): the shifted angular momentum conjugated
/// by the four-vector on the left and the two perp vectors on the right.
/// Antisymmetric in (a,b); zero on the diagonal.
pub fn so_generator(m: usize, a: usize, b: usize) -> Result<OperatorExpr> {
    if a < 1 || a > m || b < 1 || b > m {
        return Err(Error::domain(format!(
            "generator indices ({a},{b}) out of range for dimension {m}"
        )));
    }
    if a == b {
        return Ok(OperatorExpr::Zero);
    }
    let v = Multivector::four_vector(m, a, b)?;
    let perp = Multivector::perp_vector(m, a).mul(&Multivector::perp_vector(m, b));
    Ok(OperatorExpr::Compose(vec![
        OperatorExpr::RightMul(crate::op::RightFactor::new(perp)),
        OperatorExpr::LeftMulPassable(crate::op::PassableElement::new(v)),
        angular_op(a, b).plus(OperatorExpr::Scale(-Coefficient::half())),
    ]))
}

/// Harmonic rotation operator: the angular momentum followed by right
/// multiplication with e_b e_a.
pub fn omega(m: usize, a: usize, b: usize) -> Result<OperatorExpr> {
    if a == b {
        return Err(Error::domain("omega requires distinct indices".to_string()));
    }
    if a < 1 || a > m || b < 1 || b > m {
        return Err(Error::domain(format!(
            "omega indices ({a},{b}) out of range for dimension {m}"
        )));
    }
    let right = Multivector::basis_vector(m, b).mul(&Multivector::basis_vector(m, a));
    Ok(OperatorExpr::Compose(vec![
        OperatorExpr::RightMul(crate::op::RightFactor::new(right)),
        angular_op(a, b),
    ]))
}

fn check_rank_index(m: usize, a: usize) -> Result<()> {
    if a < 1 || a > rank(m) {
        return Err(Error::domain(format!(
            "index {a} exceeds rank {} of dimension {m}",
            rank(m)
        )));
    }
    Ok(())
}

/// Cartan operator of slot a: i times the rotation in the (2a-1, 2a) plane.
pub fn cartan(m: usize, a: usize) -> Result<OperatorExpr> {
    check_rank_index(m, a)?;
    Ok(so_generator(m, 2 * a - 1, 2 * a)?.scaled(Coefficient::i()))
}

fn root_combination(m: usize, a: usize, b: usize, s1: Coefficient, s2: Coefficient, s3: Coefficient) -> Result<OperatorExpr> {
    check_rank_index(m, a)?;
    check_rank_index(m, b)?;
    let i = Coefficient::i();
    Ok(OperatorExpr::Sum(vec![
        so_generator(m, 2 * a - 1, 2 * b - 1)?,
        so_generator(m, 2 * a - 1, 2 * b)?.scaled(s1 * i),
        so_generator(m, 2 * a, 2 * b - 1)?.scaled(s2 * i),
        so_generator(m, 2 * a, 2 * b)?.scaled(s3),
    ])
    .scaled(Coefficient::half()))
}

/// Root vector for the difference of the a-th and b-th weight coordinates.
/// The diagonal degenerates to the Cartan operator.
pub fn root_diff(m: usize, a: usize, b: usize) -> Result<OperatorExpr> {
    root_combination(m, a, b, Coefficient::one(), -Coefficient::one(), Coefficient::one())
}

/// Root vector for the sum of two weight coordinates; antisymmetric.
pub fn root_sum(m: usize, a: usize, b: usize) -> Result<OperatorExpr> {
    root_combination(m, a, b, -Coefficient::one(), -Coefficient::one(), -Coefficient::one())
}

/// Root vector for the negated sum of two weight coordinates; antisymmetric.
pub fn root_neg_sum(m: usize, a: usize, b: usize) -> Result<OperatorExpr> {
    root_combination(m, a, b, Coefficient::one(), Coefficient::one(), -Coefficient::one())
}

fn check_odd(m: usize) -> Result<()> {
    if m % 2 == 0 {
        return Err(Error::domain(format!(
            "short root vectors exist only in odd dimension, got m={m}"
        )));
    }
    Ok(())
}

/// Short positive root vector of slot a, odd dimension only.
pub fn root_short(m: usize, a: usize) -> Result<OperatorExpr> {
    check_odd(m)?;
    check_rank_index(m, a)?;
    Ok(OperatorExpr::Sum(vec![
        so_generator(m, 2 * a - 1, m)?,
        so_generator(m, 2 * a, m)?.scaled(-Coefficient::i()),
    ])
    .scaled(Coefficient::inv_rt2()))
}

/// Short negative root vector of slot a, odd dimension only.
pub fn root_neg_short(m: usize, a: usize) -> Result<OperatorExpr> {
    check_odd(m)?;
    check_rank_index(m, a)?;
    Ok(OperatorExpr::Sum(vec![
        so_generator(m, 2 * a - 1, m)?,
        so_generator(m, 2 * a, m)?.scaled(Coefficient::i()),
    ])
    .scaled(Coefficient::inv_rt2()))
}

/// The positive root operators of dimension m, with display labels.
pub fn positive_root_ops(m: usize) -> Result<Vec<(String, OperatorExpr)>> {
    let n = rank(m);
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            out.push((format!("X_{{{a},{b}}}"), root_diff(m, a, b)?));
            out.push((format!("Y_{{{a},{b}}}"), root_sum(m, a, b)?));
        }
    }
    if m % 2 == 1 {
        for a in 1..=n {
            out.push((format!("U_{a}"), root_short(m, a)?));
        }
    }
    Ok(out)
}

/// Weight of a simultaneous eigenvector: one exact half-integer per Cartan slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<Rat>);

impl Weight {
    pub fn entries(&self) -> &[Rat] {
        &self.0
    }

    /// Number of strictly negative entries.
    pub fn minus_count(&self) -> usize {
        self.0.iter().filter(|e| e.is_negative()).count()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|r| rat_to_string(*r)).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

/// The Cartan operators and positive-root operators of one dimension,
/// constructed once so spec sweeps can reuse them.
pub struct WeightContext {
    m: usize,
    cartans: Vec<OperatorExpr>,
    roots: Vec<(String, OperatorExpr)>,
}

impl WeightContext {
    pub fn new(m: usize) -> Result<Self> {
        let cartans = (1..=rank(m))
            .map(|a| cartan(m, a))
            .collect::<Result<_>>()?;
        Ok(WeightContext {
            m,
            cartans,
            roots: positive_root_ops(m)?,
        })
    }

    /// Apply each Cartan operator and extract the exact eigenvalue tuple.
    /// Proportionality is read off the first nonzero coefficient and then
    /// confirmed by full equality.
    pub fn weight_of(&self, f: &Poly) -> Result<Weight> {
        if f.is_zero() {
            return Err(Error::domain("weight of the zero polynomial".to_string()));
        }
        assert_eq!(self.m, f.dim());
        let (first_key, first_coeff) = f.first_term().expect("nonzero polynomial");
        let inv_first = first_coeff.inv()?;
        let mut entries = Vec::with_capacity(self.cartans.len());
        for (a, h) in self.cartans.iter().enumerate() {
            let hf = h.apply(f)?;
            let lambda = hf.coeff(first_key) * inv_first;
            if hf != f.scale(lambda) {
                return Err(Error::NotEigen(format!(
                    "Cartan slot {} does not act by a scalar",
                    a + 1
                )));
            }
            let Some(r) = lambda.as_rat() else {
                return Err(Error::NotEigen(format!(
                    "Cartan slot {} eigenvalue {lambda} is not rational",
                    a + 1
                )));
            };
            if r.denom() != 1 && r.denom() != 2 {
                return Err(Error::NotEigen(format!(
                    "Cartan slot {} eigenvalue {} is not a half-integer",
                    a + 1,
                    rat_to_string(r)
                )));
            }
            entries.push(r);
        }
        Ok(Weight(entries))
    }

    /// None when f is a highest weight vector; otherwise a diagnostic naming
    /// the first failing condition.
    pub fn hwv_failure(&self, f: &Poly) -> Result<Option<String>> {
        match self.weight_of(f) {
            Ok(_) => {}
            Err(Error::NotEigen(msg)) => {
                return Ok(Some(format!("not a weight vector: {msg}")))
            }
            Err(e) => return Err(e),
        }
        for (label, op) in &self.roots {
            if !op.apply(f)?.is_zero() {
                return Ok(Some(format!("not annihilated by {label}")));
            }
        }
        Ok(None)
    }

    pub fn is_hwv(&self, f: &Poly) -> Result<bool> {
        Ok(self.hwv_failure(f)?.is_none())
    }

    pub fn positive_roots(&self) -> &[(String, OperatorExpr)] {
        &self.roots
    }

    /// Classification by direct eigencomputation on the realized polynomial.
    pub fn classify_direct(&self, spec: &IdempotentSpec, k: usize) -> Result<HwvClass> {
        let m = spec.len();
        assert_eq!(self.m, m);
        let f = monogenic_generator(k, m).right_mul(&spec.realize());
        if self.hwv_failure(&f)?.is_some() {
            return Ok(HwvClass::Other);
        }
        let w = self.weight_of(&f)?;
        if w == plus_weight(m, k) {
            Ok(HwvClass::PlusHwv)
        } else if m % 2 == 0 && w == minus_weight(m, k) {
            Ok(HwvClass::MinusHwv)
        } else {
            Ok(HwvClass::Other)
        }
    }
}

/// Weight of a simultaneous eigenvector via a freshly built context.
pub fn weight_of(f: &Poly) -> Result<Weight> {
    WeightContext::new(f.dim())?.weight_of(f)
}

/// None when f is a highest weight vector; otherwise a diagnostic naming
/// the first failing condition.
pub fn hwv_failure(f: &Poly) -> Result<Option<String>> {
    WeightContext::new(f.dim())?.hwv_failure(f)
}

/// True when f is a weight vector annihilated by every positive root operator.
pub fn is_hwv(f: &Poly) -> Result<bool> {
    Ok(hwv_failure(f)?.is_none())
}

/// Classification of an idempotent against the two extreme weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HwvClass {
    PlusHwv,
    MinusHwv,
    Other,
}

impl fmt::Display for HwvClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HwvClass::PlusHwv => "plus",
            HwvClass::MinusHwv => "minus",
            HwvClass::Other => "other",
        };
        f.write_str(s)
    }
}

/// Parity of |F_{2a-1}| + |F_{2a}| + ||F_{2a-1}|| + ||F_{2a}||.
pub fn pair_parity(spec: &IdempotentSpec, a: usize) -> u8 {
    let f1 = spec.factor(2 * a - 1);
    let f2 = spec.factor(2 * a);
    (f1.phase_grade() + f2.phase_grade() + f1.family_grade() + f2.family_grade()) % 2
}

/// The highest weight with all entries 1/2 except k + 1/2 in the first slot.
pub fn plus_weight(m: usize, k: usize) -> Weight {
    let n = rank(m);
    let mut entries = vec![rat(1, 2); n];
    entries[0] = rat(2 * k as i64 + 1, 2);
    Weight(entries)
}

/// The companion weight with the last entry negated (even dimension). At
/// rank one the first and last slot coincide, so the whole entry flips sign.
pub fn minus_weight(m: usize, k: usize) -> Weight {
    let n = rank(m);
    let mut w = plus_weight(m, k);
    if n == 1 {
        w.0[0] = -w.0[0];
    } else {
        w.0[n - 1] = -w.0[n - 1];
    }
    w
}

/// Pure parity classification of the idempotent for degree k: which of the
/// two extreme weights (if either) the generator-times-idempotent carries.
/// In odd dimension only the plus class exists and the last factor is
/// unconstrained.
pub fn classify_spec(spec: &IdempotentSpec, k: usize) -> HwvClass {
    let m = spec.len();
    let n = rank(m);
    let first = (k as u8 + pair_parity(spec, 1)) % 2;
    if m % 2 == 1 {
        let middle_even = (2..=n).all(|a| pair_parity(spec, a) == 0);
        return if first == 0 && middle_even {
            HwvClass::PlusHwv
        } else {
            HwvClass::Other
        };
    }
    if n == 1 {
        // rank one: the single Cartan eigenvalue is +-(k + 1/2) and the sign
        // is decided by the same parity that fills the first slot
        return if first == 0 {
            HwvClass::PlusHwv
        } else {
            HwvClass::MinusHwv
        };
    }
    if first != 0 {
        return HwvClass::Other;
    }
    let middle_even = (2..n).all(|a| pair_parity(spec, a) == 0);
    if !middle_even {
        return HwvClass::Other;
    }
    if pair_parity(spec, n) == 0 {
        HwvClass::PlusHwv
    } else {
        HwvClass::MinusHwv
    }
}

/// Classification by direct eigencomputation via a freshly built context.
pub fn classify_direct(spec: &IdempotentSpec, k: usize) -> Result<HwvClass> {
    WeightContext::new(spec.len())?.classify_direct(spec, k)
}

/// Count the plus and minus classes over all 4^m specs by the parity predicates.
pub fn hwv_count(m: usize, k: usize) -> (usize, usize) {
    let mut plus = 0;
    let mut minus = 0;
    for spec in enumerate_specs(m) {
        match classify_spec(&spec, k) {
            HwvClass::PlusHwv => plus += 1,
            HwvClass::MinusHwv => minus += 1,
            HwvClass::Other => {}
        }
    }
    (plus, minus)
}

/// One basis vector of a spinor orbit.
#[derive(Debug, Clone)]
pub struct OrbitVector {
    /// The idempotent whose realization spans this line, when identified.
    pub spec: Option<IdempotentSpec>,
    pub mv: Multivector,
    pub weight: Weight,
}

#[derive(Debug, Clone)]
pub enum OrbitTarget {
    /// Image is exactly scalar times a single basis vector.
    Scalar { to: usize, scalar: Coefficient },
    /// Image is a genuine combination of several basis vectors.
    Mixed,
}

#[derive(Debug, Clone)]
pub struct OrbitEdge {
    pub from: usize,
    pub gen: (usize, usize),
    pub target: OrbitTarget,
}

/// Closure of the span of a realized idempotent under all rotation
/// generators acting on degree-zero polynomials.
#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub m: usize,
    pub start: IdempotentSpec,
    pub vectors: Vec<OrbitVector>,
    pub edges: Vec<OrbitEdge>,
}

impl OrbitReport {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }

    /// Specs of all identified basis vectors.
    pub fn spec_strings(&self) -> Vec<String> {
        self.vectors
            .iter()
            .map(|v| match &v.spec {
                Some(s) => s.to_string(),
                None => format!("<unidentified: {}>", v.mv),
            })
            .collect()
    }

    /// DOT rendering: nodes are spec strings, edges carry the generator
    /// pair and the exact scalar.
    pub fn to_dot(&self) -> String {
        let names = self.spec_strings();
        let mut out = String::from("digraph spinor_orbit {\n");
        for name in &names {
            out.push_str(&format!("    \"{name}\";\n"));
        }
        for e in &self.edges {
            if let OrbitTarget::Scalar { to, scalar } = &e.target {
                out.push_str(&format!(
                    "    \"{}\" -> \"{}\" [label=\"({},{}) \u{d7} {}\"];\n",
                    names[e.from], names[*to], e.gen.0, e.gen.1, scalar
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

fn mv_to_vec(mv: &Multivector, m: usize) -> Vec<Coefficient> {
    let mut v = vec![Coefficient::zero(); 4usize.pow(m as u32)];
    for (b, c) in mv.terms() {
        v[b.0 as usize] = *c;
    }
    v
}

fn poly_to_mv(p: &Poly) -> Multivector {
    let mut mv = Multivector::zero(p.dim());
    for (k, c) in p.terms() {
        assert_eq!(k.exps.degree(), 0, "expected a degree-zero polynomial");
        mv.add_term(k.blade, *c);
    }
    mv
}

type MvKey = Vec<(u16, Coefficient)>;

/// Key for matching multivectors up to scalar: coefficients normalized so
/// the first blade carries 1.
fn normalized_key(mv: &Multivector) -> Option<(MvKey, Coefficient)> {
    let (_, first) = mv.terms().next()?;
    let anchor = *first;
    let inv = anchor.inv().ok()?;
    let key = mv.terms().map(|(b, c)| (b.0, *c * inv)).collect();
    Some((key, anchor))
}

/// Identify a multivector as scalar times a realized spec, searching the
/// given candidate specs. Returns the spec and the scalar.
fn identify(
    mv: &Multivector,
    table: &HashMap<MvKey, IdempotentSpec>,
) -> Option<(IdempotentSpec, Coefficient)> {
    let (key, anchor) = normalized_key(mv)?;
    let spec = table.get(&key)?;
    let realized = spec.realize();
    let (_, rf) = realized.terms().next()?;
    // mv = scalar * realized with scalar = anchor / first coefficient of realized
    let scalar = anchor * rf.inv().ok()?;
    debug_assert_eq!(realized.scale(scalar), *mv);
    Some((spec.clone(), scalar))
}

fn spec_table(specs: impl Iterator<Item = IdempotentSpec>) -> HashMap<MvKey, IdempotentSpec> {
    let mut table = HashMap::new();
    for spec in specs {
        if let Some((key, _)) = normalized_key(&spec.realize()) {
            table.insert(key, spec);
        }
    }
    table
}

/// Sign patterns over the start's family vector: the cheap candidate set
/// for identifying orbit vectors before falling back to all 4^m specs.
fn family_preserving_specs(start: &IdempotentSpec) -> Vec<IdempotentSpec> {
    let m = start.len();
    let mut out = Vec::with_capacity(1 << m);
    for mask in 0..(1u32 << m) {
        let mut spec = start.clone();
        for s in 1..=m {
            if mask & (1 << (s - 1)) != 0 {
                spec = spec.tilde(s).expect("index in range");
            }
        }
        out.push(spec);
    }
    out
}

/// Compute the orbit closure from a starting idempotent: repeated
/// application of every rotation generator with exact span insertion until
/// stable. Basis vectors identified as idempotents are stored as their
/// realizations so edge scalars refer to the plain idempotent words.
pub fn spinor_orbit(start: &IdempotentSpec) -> Result<OrbitReport> {
    let m = start.len();
    if m < 2 {
        return Err(Error::usage("orbits need dimension at least 2".to_string()));
    }
    let mut table = spec_table(family_preserving_specs(start).into_iter());
    let mut full_table_built = false;

    let mut span = Span::new();
    let mut vectors: Vec<(Option<IdempotentSpec>, Multivector)> = Vec::new();
    let mut edges: Vec<OrbitEdge> = Vec::new();

    let start_mv = start.realize();
    span.insert(mv_to_vec(&start_mv, m));
    vectors.push((Some(start.clone()), start_mv));

    let mut next = 0usize;
    while next < vectors.len() {
        let idx = next;
        next += 1;
        let source = Poly::constant(m, &vectors[idx].1);
        for a in 1..=m {
            for b in a + 1..=m {
                let image = poly_to_mv(&so_generator(m, a, b)?.apply(&source)?);
                if image.is_zero() {
                    continue;
                }
                // identify the image against realized specs, widening the
                // candidate table once if needed
                let mut found = identify(&image, &table);
                if found.is_none() && !full_table_built {
                    table = spec_table(enumerate_specs(m));
                    full_table_built = true;
                    found = identify(&image, &table);
                }
                let (rep_spec, rep_mv, scalar) = match found {
                    Some((spec, scalar)) => {
                        let rep = spec.realize();
                        (Some(spec), rep, scalar)
                    }
                    None => (None, image.clone(), Coefficient::one()),
                };
                if span.insert(mv_to_vec(&image, m)) {
                    vectors.push((rep_spec.clone(), rep_mv));
                }
                // locate the basis index spanning the image line
                let target = vectors.iter().position(|(_, mv)| {
                    normalized_key(mv).map(|(k, _)| k) == normalized_key(&image).map(|(k, _)| k)
                });
                let target = match target {
                    Some(to) => OrbitTarget::Scalar { to, scalar },
                    None => OrbitTarget::Mixed,
                };
                edges.push(OrbitEdge {
                    from: idx,
                    gen: (a, b),
                    target,
                });
            }
        }
    }

    let vectors = vectors
        .into_iter()
        .map(|(spec, mv)| {
            let weight = weight_of(&Poly::constant(m, &mv))?;
            Ok(OrbitVector { spec, mv, weight })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(OrbitReport {
        m,
        start: start.clone(),
        vectors,
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{monomials_up_to_degree, partner_generator};
    use crate::clifford::Blade;

    fn gk_f(k: usize, spec_text: &str) -> Poly {
        let spec = IdempotentSpec::parse(spec_text).unwrap();
        monogenic_generator(k, spec.len()).right_mul(&spec.realize())
    }

    #[test]
    fn cartan_eigenvalue_on_base_idempotent() {
        // dR in the (1,2) plane acts on the all-plus idempotent by -i/2
        let m = 4;
        let spec = IdempotentSpec::all_l_plus(m);
        let f = Poly::constant(m, &spec.realize());
        let img = so_generator(m, 1, 2).unwrap().apply(&f).unwrap();
        assert_eq!(img, f.scale(-Coefficient::i() * Coefficient::half()));
        // hence the Cartan eigenvalue is 1/2
        let h1 = cartan(m, 1).unwrap().apply(&f).unwrap();
        assert_eq!(h1, f.scale(Coefficient::half()));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(
            weight_of(&gk_f(2, "L+ L+ L+ L+")).unwrap(),
            Weight(vec![rat(5, 2), rat(1, 2)])
        );
        assert_eq!(
            weight_of(&gk_f(1, "L+ L- L+ L+")).unwrap(),
            Weight(vec![rat(3, 2), rat(1, 2)])
        );
        assert_eq!(
            weight_of(&gk_f(1, "L+ L+ L+ L+")).unwrap(),
            Weight(vec![rat(-3, 2), rat(1, 2)])
        );
    }

    #[test]
    fn hwv_examples() {
        assert!(is_hwv(&gk_f(2, "L+ L+ L+ L+")).unwrap());
        assert!(is_hwv(&gk_f(3, "L+ L- L+ L+ L+")).unwrap());
        assert!(!is_hwv(&gk_f(1, "L+ L+ L+ L+")).unwrap());
        // a non-eigenvector yields a diagnostic, not an error
        let m = 4;
        let mixed = gk_f(0, "L+ L+ L+ L+").add(&Poly::term(
            m,
            crate::poly::ExponentVector::zero(),
            Blade(0b0001),
            Coefficient::one(),
        ));
        assert!(hwv_failure(&mixed).unwrap().is_some());
    }

    #[test]
    fn classification_examples() {
        let cases = [
            ("L+ L+ L+ L+", 0, HwvClass::PlusHwv),
            ("L+ L+ L+ L-", 0, HwvClass::MinusHwv),
            ("L+ L- L+ L+", 0, HwvClass::Other),
            ("L+ L- L+ L+", 1, HwvClass::PlusHwv),
            ("L+ L+ L+ L+", 1, HwvClass::Other),
        ];
        for (text, k, expect) in cases {
            let spec = IdempotentSpec::parse(text).unwrap();
            assert_eq!(classify_spec(&spec, k), expect, "{text} at k={k}");
            assert_eq!(classify_direct(&spec, k).unwrap(), expect, "{text} at k={k}");
        }
    }

    #[test]
    fn count_examples() {
        for k in 0..=3 {
            assert_eq!(hwv_count(4, k), (64, 64));
            assert_eq!(hwv_count(3, k), (32, 0));
            assert_eq!(hwv_count(2, k), (8, 8));
            assert_eq!(hwv_count(5, k), (256, 0));
        }
    }

    #[test]
    fn short_root_bracket_at_rank_one() {
        // [U_1, V_1] = -H_1 in dimension 3 on a small basis
        let m = 3;
        let u = root_short(m, 1).unwrap();
        let v = root_neg_short(m, 1).unwrap();
        let h = cartan(m, 1).unwrap();
        for exps in monomials_up_to_degree(m, 2) {
            for blade in 0..64u16 {
                let f = Poly::term(m, exps, Blade(blade), Coefficient::one());
                let lhs = OperatorExpr::commutator_apply(&u, &v, &f).unwrap();
                let rhs = h.apply(&f).unwrap().neg();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn generator_antisymmetry() {
        let m = 3;
        let ab = so_generator(m, 1, 3).unwrap();
        let ba = so_generator(m, 3, 1).unwrap();
        for exps in monomials_up_to_degree(m, 2) {
            let f = Poly::term(m, exps, Blade(0b10), Coefficient::one());
            assert_eq!(
                ab.apply(&f).unwrap(),
                ba.apply(&f).unwrap().neg()
            );
        }
    }

    #[test]
    fn omega_brackets() {
        // [omega_12, omega_23] = omega_13 in dimension 3
        let m = 3;
        let o12 = omega(m, 1, 2).unwrap();
        let o23 = omega(m, 2, 3).unwrap();
        let o13 = omega(m, 1, 3).unwrap();
        for exps in monomials_up_to_degree(m, 2) {
            for blade in [0u16, 1, 5, 9] {
                let f = Poly::term(m, exps, Blade(blade), Coefficient::one());
                let lhs = OperatorExpr::commutator_apply(&o12, &o23, &f).unwrap();
                assert_eq!(lhs, o13.apply(&f).unwrap());
            }
        }
        // disjoint indices commute in dimension 4
        let m = 4;
        let o12 = omega(m, 1, 2).unwrap();
        let o34 = omega(m, 3, 4).unwrap();
        for exps in monomials_up_to_degree(m, 2) {
            let f = Poly::term(m, exps, Blade(0), Coefficient::one());
            assert!(OperatorExpr::commutator_apply(&o12, &o34, &f)
                .unwrap()
                .is_zero());
        }
        assert!(omega(m, 2, 2).is_err());
    }

    #[test]
    fn orbit_even_dimension() {
        let report = spinor_orbit(&IdempotentSpec::parse("L+ L+ L+ L+").unwrap()).unwrap();
        assert_eq!(report.dimension(), 2);
        let mut specs = report.spec_strings();
        specs.sort();
        assert_eq!(specs, vec!["L+ L+ L+ L+", "L+ L- L- L+"]);
        // weights carry an even number of minus signs
        for v in &report.vectors {
            assert_eq!(v.weight.minus_count() % 2, 0);
        }
    }

    #[test]
    fn orbit_odd_dimension() {
        let report = spinor_orbit(&IdempotentSpec::all_l_plus(5)).unwrap();
        assert_eq!(report.dimension(), 4);
        let mut specs = report.spec_strings();
        specs.sort();
        assert_eq!(
            specs,
            vec![
                "L+ L+ L+ L+ L+",
                "L+ L+ L+ L- L-",
                "L+ L- L- L+ L+",
                "L+ L- L- L- L-",
            ]
        );
    }

    #[test]
    fn realized_specs_are_projectively_distinct() {
        // orbit identification matches normalized coefficient vectors, so
        // no two specs may realize to proportional multivectors
        for m in 2..=4usize {
            let keys: std::collections::HashSet<_> = enumerate_specs(m)
                .map(|s| normalized_key(&s.realize()).expect("nonzero").0)
                .collect();
            assert_eq!(keys.len(), 4usize.pow(m as u32));
        }
    }

    #[test]
    fn partner_generator_is_not_monogenic() {
        // negative control for the generator pair
        let f1 = partner_generator(1, 2);
        assert!(!f1.dirac().is_zero());
    }

    #[test]
    fn domain_errors() {
        assert!(cartan(4, 3).is_err());
        assert!(root_short(4, 1).is_err());
        assert!(so_generator(3, 0, 2).is_err());
    }
}
