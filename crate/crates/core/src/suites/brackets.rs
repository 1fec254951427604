//! Bracket-table suites: commutator relations of the Cartan basis, checked
//! extensionally on a finite-degree basis tensored with all blades.
//!
//! Every Cartan-basis operator is a linear combination of the rotation
//! generators, so each sweep caches the first- and second-level generator
//! images per basis element and assembles the brackets from those. The
//! antisymmetry used for index normalization is checked on the same basis.

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::lie::{rank, so_generator};
use crate::op::OperatorExpr;
use crate::poly::{Monomial, Poly};
use crate::suites::catalog::{basis_terms, select, sweep_cases};
use crate::suites::{Check, SuiteParams, SuiteReport};

/// The canonical rotation generators dR(e_{a,b}) with a < b, plus their
/// transposed counterparts for the antisymmetry check.
struct GenBasis {
    pairs: Vec<(usize, usize)>,
    ops: Vec<OperatorExpr>,
    rev_ops: Vec<OperatorExpr>,
}

impl GenBasis {
    fn new(m: usize) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut ops = Vec::new();
        let mut rev_ops = Vec::new();
        for a in 1..=m {
            for b in a + 1..=m {
                pairs.push((a, b));
                ops.push(so_generator(m, a, b)?);
                rev_ops.push(so_generator(m, b, a)?);
            }
        }
        Ok(GenBasis {
            pairs,
            ops,
            rev_ops,
        })
    }

    fn idx(&self, a: usize, b: usize) -> (usize, bool) {
        let (lo, hi, flipped) = if a < b { (a, b, false) } else { (b, a, true) };
        let i = self
            .pairs
            .iter()
            .position(|&p| p == (lo, hi))
            .expect("generator pair in range");
        (i, flipped)
    }
}

/// A Cartan-basis operator as a combination of canonical generators.
#[derive(Clone, Default)]
struct Combo(Vec<(Coefficient, usize)>);

impl Combo {
    /// Normalize transposed index pairs through the antisymmetry of the
    /// generators; diagonal pairs vanish.
    fn new(gens: &GenBasis, scale: Coefficient, parts: &[(Coefficient, usize, usize)]) -> Combo {
        let mut out = Vec::new();
        for &(c, a, b) in parts {
            if a == b {
                continue;
            }
            let (i, flipped) = gens.idx(a, b);
            let c = if flipped { -c } else { c } * scale;
            if !c.is_zero() {
                out.push((c, i));
            }
        }
        Combo(out)
    }
}

struct BracketCase {
    /// Self-describing relation, e.g. "[H_1, X_{1,2}] = X_{1,2}".
    name: String,
    lhs: (usize, usize),
    rhs: Vec<(i64, usize)>,
}

pub struct BracketTable {
    gens: GenBasis,
    atoms: Vec<(String, Combo)>,
    cases: Vec<BracketCase>,
}

fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

struct TableBuilder {
    gens: GenBasis,
    atoms: Vec<(String, Combo)>,
    cases: Vec<BracketCase>,
}

impl TableBuilder {
    fn new(m: usize) -> Result<Self> {
        Ok(TableBuilder {
            gens: GenBasis::new(m)?,
            atoms: Vec::new(),
            cases: Vec::new(),
        })
    }

    fn atom(&mut self, label: String, scale: Coefficient, parts: &[(Coefficient, usize, usize)]) -> usize {
        if let Some(i) = self.atoms.iter().position(|(l, _)| *l == label) {
            return i;
        }
        let combo = Combo::new(&self.gens, scale, parts);
        self.atoms.push((label, combo));
        self.atoms.len() - 1
    }

    fn cartan(&mut self, m: usize, a: usize) -> usize {
        let _ = m;
        self.atom(
            format!("H_{a}"),
            Coefficient::one(),
            &[(Coefficient::i(), 2 * a - 1, 2 * a)],
        )
    }

    fn long_roots(&mut self, a: usize, b: usize) -> (usize, usize, usize) {
        let i = Coefficient::i();
        let one = Coefficient::one();
        let x = self.atom(
            format!("X_{{{a},{b}}}"),
            Coefficient::half(),
            &[
                (one, 2 * a - 1, 2 * b - 1),
                (i, 2 * a - 1, 2 * b),
                (-i, 2 * a, 2 * b - 1),
                (one, 2 * a, 2 * b),
            ],
        );
        let y = self.atom(
            format!("Y_{{{a},{b}}}"),
            Coefficient::half(),
            &[
                (one, 2 * a - 1, 2 * b - 1),
                (-i, 2 * a - 1, 2 * b),
                (-i, 2 * a, 2 * b - 1),
                (-one, 2 * a, 2 * b),
            ],
        );
        let z = self.atom(
            format!("Z_{{{a},{b}}}"),
            Coefficient::half(),
            &[
                (one, 2 * a - 1, 2 * b - 1),
                (i, 2 * a - 1, 2 * b),
                (i, 2 * a, 2 * b - 1),
                (-one, 2 * a, 2 * b),
            ],
        );
        (x, y, z)
    }

    fn short_roots(&mut self, m: usize, a: usize) -> (usize, usize) {
        let i = Coefficient::i();
        let rt = Coefficient::inv_rt2();
        let u = self.atom(
            format!("U_{a}"),
            rt,
            &[(Coefficient::one(), 2 * a - 1, m), (-i, 2 * a, m)],
        );
        let v = self.atom(
            format!("V_{a}"),
            rt,
            &[(Coefficient::one(), 2 * a - 1, m), (i, 2 * a, m)],
        );
        (u, v)
    }

    fn zero(&mut self) -> usize {
        self.atom("0".to_string(), Coefficient::zero(), &[])
    }

    fn case(&mut self, a: usize, b: usize, rhs: Vec<(i64, usize)>) {
        let rhs: Vec<(i64, usize)> = rhs.into_iter().filter(|(c, _)| *c != 0).collect();
        let name = format!(
            "[{}, {}] = {}",
            self.atoms[a].0,
            self.atoms[b].0,
            render_rhs(&rhs, &self.atoms)
        );
        self.cases.push(BracketCase {
            name,
            lhs: (a, b),
            rhs,
        });
    }

    fn build(self) -> BracketTable {
        BracketTable {
            gens: self.gens,
            atoms: self.atoms,
            cases: self.cases,
        }
    }
}

fn render_rhs(rhs: &[(i64, usize)], atoms: &[(String, Combo)]) -> String {
    let mut out = String::new();
    for (c, i) in rhs {
        if *c == 0 {
            continue;
        }
        let label = &atoms[*i].0;
        if out.is_empty() {
            match c {
                1 => out.push_str(label),
                -1 => out.push_str(&format!("-{label}")),
                _ => out.push_str(&format!("{c}*{label}")),
            }
        } else {
            let sign = if *c < 0 { " - " } else { " + " };
            out.push_str(sign);
            match c.abs() {
                1 => out.push_str(label),
                v => out.push_str(&format!("{v}*{label}")),
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Cartan/raising/lowering table of even dimension: the adjoint action of
/// the Cartan operators on the long-root vectors, the mixed long-root
/// bracket and the two relations recovering Cartan elements.
pub fn even_table(m: usize) -> Result<BracketTable> {
    let n = rank(m);
    let mut t = TableBuilder::new(m)?;
    let mut h = vec![0usize; n + 1];
    for a in 1..=n {
        h[a] = t.cartan(m, a);
    }
    let mut x = vec![vec![0usize; n + 1]; n + 1];
    let mut y = vec![vec![0usize; n + 1]; n + 1];
    let mut z = vec![vec![0usize; n + 1]; n + 1];
    for a in 1..=n {
        for b in 1..=n {
            if a == b {
                continue;
            }
            let (xi, yi, zi) = t.long_roots(a, b);
            x[a][b] = xi;
            y[a][b] = yi;
            z[a][b] = zi;
        }
    }
    let zero = t.zero();
    let y_at = |a: usize, b: usize| if a == b { zero } else { y[a][b] };

    for c in 1..=n {
        for a in 1..=n {
            for b in 1..=n {
                if a == b {
                    continue;
                }
                t.case(h[c], x[a][b], vec![(delta(c, a) - delta(c, b), x[a][b])]);
                t.case(h[c], y[a][b], vec![(delta(c, a) + delta(c, b), y[a][b])]);
                t.case(h[c], z[a][b], vec![(-(delta(c, a) + delta(c, b)), z[a][b])]);
            }
        }
    }
    for a in 1..=n {
        for b in 1..=n {
            if a == b {
                continue;
            }
            for c in 1..=n {
                for d in 1..=n {
                    if c == d {
                        continue;
                    }
                    t.case(
                        x[a][b],
                        y[c][d],
                        vec![
                            (delta(b, c), y_at(a, d)),
                            (-delta(b, d), y_at(a, c)),
                        ],
                    );
                }
            }
            t.case(y[a][b], z[a][b], vec![(-1, h[a]), (-1, h[b])]);
            t.case(x[a][b], x[b][a], vec![(1, h[a]), (-1, h[b])]);
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            t.case(h[a], h[b], vec![]);
        }
    }
    Ok(t.build())
}

/// Adjoint action of the Cartan operators on the short-root vectors of odd
/// dimension.
pub fn short_root_cartan_table(m: usize) -> Result<BracketTable> {
    let n = rank(m);
    let mut t = TableBuilder::new(m)?;
    for a in 1..=n {
        t.cartan(m, a);
        t.short_roots(m, a);
    }
    for a in 1..=n {
        let h = t.cartan(m, a);
        for b in 1..=n {
            let (u, v) = t.short_roots(m, b);
            t.case(h, u, vec![(delta(a, b), u)]);
            t.case(h, v, vec![(-delta(a, b), v)]);
        }
    }
    Ok(t.build())
}

/// Brackets of the short-root vectors with everything else in odd dimension.
pub fn short_root_mixed_table(m: usize) -> Result<BracketTable> {
    let n = rank(m);
    let mut t = TableBuilder::new(m)?;
    let mut h = vec![0usize; n + 1];
    let mut u = vec![0usize; n + 1];
    let mut v = vec![0usize; n + 1];
    for a in 1..=n {
        h[a] = t.cartan(m, a);
        let (ua, va) = t.short_roots(m, a);
        u[a] = ua;
        v[a] = va;
    }
    let mut x = vec![vec![0usize; n + 1]; n + 1];
    let mut y = vec![vec![0usize; n + 1]; n + 1];
    let mut z = vec![vec![0usize; n + 1]; n + 1];
    for a in 1..=n {
        for b in 1..=n {
            if a == b {
                continue;
            }
            let (xi, yi, zi) = t.long_roots(a, b);
            x[a][b] = xi;
            y[a][b] = yi;
            z[a][b] = zi;
        }
    }
    let zero = t.zero();
    let y_at = |a: usize, b: usize| if a == b { zero } else { y[a][b] };

    for c in 1..=n {
        for d in 1..=n {
            if c != d {
                t.case(u[c], u[d], vec![(-1, y[c][d])]);
                t.case(v[c], v[d], vec![(-1, z[c][d])]);
                t.case(u[c], v[d], vec![(-1, x[c][d])]);
            } else {
                t.case(u[c], v[c], vec![(-1, h[c])]);
            }
        }
    }
    for c in 1..=n {
        for a in 1..=n {
            for b in 1..=n {
                if a == b {
                    continue;
                }
                t.case(u[c], x[a][b], vec![(-delta(c, b), u[a])]);
                t.case(v[c], x[a][b], vec![(delta(c, a), v[b])]);
                t.case(u[c], y[a][b], vec![]);
                t.case(
                    v[c],
                    y[a][b],
                    vec![(delta(c, a), u[b]), (-delta(c, b), u[a])],
                );
                t.case(
                    u[c],
                    z[a][b],
                    vec![(-delta(c, b), v[a]), (delta(c, a), v[b])],
                );
                t.case(v[c], z[a][b], vec![]);
            }
        }
    }
    // the long-root relations hold in odd dimension as well, including the
    // two that recover Cartan elements
    for a in 1..=n {
        for b in 1..=n {
            if a == b {
                continue;
            }
            for c in 1..=n {
                for d in 1..=n {
                    if c == d {
                        continue;
                    }
                    t.case(
                        x[a][b],
                        y[c][d],
                        vec![
                            (delta(b, c), y_at(a, d)),
                            (-delta(b, d), y_at(a, c)),
                        ],
                    );
                }
            }
            t.case(y[a][b], z[a][b], vec![(-1, h[a]), (-1, h[b])]);
            t.case(x[a][b], x[b][a], vec![(1, h[a]), (-1, h[b])]);
        }
    }
    Ok(t.build())
}

/// Evaluate every case of a table extensionally over the basis selected by
/// the parameters. One check per case plus one antisymmetry check per
/// generator pair (the normalization the combinations rely on).
pub fn run_table(table: &BracketTable, m: usize, params: &SuiteParams) -> Result<Vec<Check>> {
    let basis = select(basis_terms(m, params.degree()), params);
    let n_gens = table.gens.ops.len();
    let n_cases = table.cases.len();

    let witnesses = sweep_cases(&basis, n_cases + n_gens, |f: &Poly| {
        let mut failures = Vec::new();
        // first-level generator images
        let img1: Vec<Poly> = table
            .gens
            .ops
            .iter()
            .map(|op| op.apply(f))
            .collect::<Result<_>>()?;
        // antisymmetry: the transposed generator negates the image
        for (g, rev) in table.gens.rev_ops.iter().enumerate() {
            if rev.apply(f)? != img1[g].neg() {
                let (a, b) = table.gens.pairs[g];
                failures.push((n_cases + g, format!("f = {f}: dR({b},{a}) != -dR({a},{b})")));
            }
        }
        // atom images for right-hand sides
        let atom_img: Vec<Poly> = table
            .atoms
            .iter()
            .map(|(_, combo)| {
                let mut acc = Poly::zero(m);
                for &(c, g) in &combo.0 {
                    acc = acc.add(&img1[g].scale(c));
                }
                acc
            })
            .collect();
        // second-level images, filled lazily per case and then read back
        let mut img2: Vec<Option<Poly>> = vec![None; n_gens * n_gens];
        for (ci, case) in table.cases.iter().enumerate() {
            let (ai, bi) = case.lhs;
            for &(_, g) in &table.atoms[ai].1 .0 {
                for &(_, h) in &table.atoms[bi].1 .0 {
                    for slot in [g * n_gens + h, h * n_gens + g] {
                        if img2[slot].is_none() {
                            img2[slot] =
                                Some(table.gens.ops[slot / n_gens].apply(&img1[slot % n_gens])?);
                        }
                    }
                }
            }
            let mut raw: Vec<(Monomial, Coefficient)> = Vec::new();
            for &(ca, g) in &table.atoms[ai].1 .0 {
                for &(cb, h) in &table.atoms[bi].1 .0 {
                    let w = ca * cb;
                    let gh = img2[g * n_gens + h].as_ref().expect("filled above");
                    for (k, c) in gh.terms() {
                        raw.push((*k, *c * w));
                    }
                    let hg = img2[h * n_gens + g].as_ref().expect("filled above");
                    for (k, c) in hg.terms() {
                        raw.push((*k, -(*c * w)));
                    }
                }
            }
            for &(rc, atom) in &case.rhs {
                let rc = Coefficient::from_int(rc);
                for (k, c) in atom_img[atom].terms() {
                    raw.push((*k, -(*c * rc)));
                }
            }
            let diff = Poly::from_raw(m, raw);
            if !diff.is_zero() {
                // reassemble both sides separately for the witness
                let mut lhs = Poly::zero(m);
                for &(ca, g) in &table.atoms[ai].1 .0 {
                    for &(cb, h) in &table.atoms[bi].1 .0 {
                        let w = ca * cb;
                        lhs = lhs.add(
                            &img2[g * n_gens + h].as_ref().expect("filled").scale(w),
                        );
                        lhs = lhs.sub(
                            &img2[h * n_gens + g].as_ref().expect("filled").scale(w),
                        );
                    }
                }
                let mut rhs = Poly::zero(m);
                for &(rc, atom) in &case.rhs {
                    rhs = rhs.add(&atom_img[atom].scale(Coefficient::from_int(rc)));
                }
                failures.push((ci, format!("f = {f}: lhs = {lhs}, rhs = {rhs}")));
            }
        }
        Ok(failures)
    })?;

    let mut checks: Vec<Check> = table
        .cases
        .iter()
        .zip(witnesses.iter().take(n_cases))
        .map(|(case, w)| Check::from_witness(case.name.clone(), w.clone()))
        .collect();
    for (g, w) in witnesses.iter().skip(n_cases).enumerate() {
        let (a, b) = table.gens.pairs[g];
        checks.push(Check::from_witness(
            format!("antisymmetry_a{a}_b{b}"),
            w.clone(),
        ));
    }
    Ok(checks)
}

/// Even-dimension bracket table suite.
pub fn lemma1(params: &SuiteParams) -> Result<SuiteReport> {
    let m = params.m.unwrap_or(4);
    if m != 4 {
        return Err(Error::usage(format!(
            "lemma1 runs in even dimension 4 (rank 2 with a desk-scale basis), got m={m}"
        )));
    }
    let table = even_table(m)?;
    let checks = run_table(&table, m, params)?;
    Ok(SuiteReport::new("lemma1", params.clone(), checks))
}

/// Short-root Cartan action suite (odd dimension).
pub fn lemma5(params: &SuiteParams) -> Result<SuiteReport> {
    let m = params.m.unwrap_or(5);
    if m != 3 && m != 5 {
        return Err(Error::usage(format!("lemma5 supports m in {{3, 5}}, got m={m}")));
    }
    let table = short_root_cartan_table(m)?;
    let checks = run_table(&table, m, params)?;
    Ok(SuiteReport::new("lemma5", params.clone(), checks))
}

/// Short-root mixed bracket suite (odd dimension).
pub fn lemma6(params: &SuiteParams) -> Result<SuiteReport> {
    let m = params.m.unwrap_or(5);
    if m != 3 && m != 5 {
        return Err(Error::usage(format!("lemma6 supports m in {{3, 5}}, got m={m}")));
    }
    let table = short_root_mixed_table(m)?;
    let checks = run_table(&table, m, params)?;
    Ok(SuiteReport::new("lemma6", params.clone(), checks))
}
