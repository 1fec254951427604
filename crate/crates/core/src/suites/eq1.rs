//! Defining bracket relations of the rotation generators, checked for every
//! index quadruple on the finite-degree basis.

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::lie::so_generator;
use crate::op::OperatorExpr;
use crate::poly::Poly;
use crate::suites::catalog::{basis_terms, select, sweep_cases};
use crate::suites::{Check, SuiteParams, SuiteReport};

/// [dR(e_{a,b}), dR(e_{c,d})] = delta_ad dR(e_{b,c}) + delta_bc dR(e_{a,d})
///                            - delta_ac dR(e_{b,d}) - delta_bd dR(e_{a,c})
pub fn eq1(params: &SuiteParams) -> Result<SuiteReport> {
    let m = params.m.unwrap_or(4);
    if !(2..=4).contains(&m) {
        return Err(Error::usage(format!("eq1 supports 2 <= m <= 4, got m={m}")));
    }
    let degree = params.degree();
    if degree > 4 {
        return Err(Error::usage(format!(
            "eq1 caps the basis degree at 4, got {degree}"
        )));
    }

    // all ordered generator pairs, including the vanishing diagonal
    let mut gens = vec![vec![OperatorExpr::Zero; m + 1]; m + 1];
    for a in 1..=m {
        for b in 1..=m {
            gens[a][b] = so_generator(m, a, b)?;
        }
    }

    let mut quads = Vec::new();
    for a in 1..=m {
        for b in 1..=m {
            for c in 1..=m {
                for d in 1..=m {
                    quads.push((a, b, c, d));
                }
            }
        }
    }

    let basis = select(basis_terms(m, degree), params);
    let delta = |x: usize, y: usize| x == y;
    let witnesses = sweep_cases(&basis, quads.len(), |f: &Poly| {
        // cache first-level images of every generator pair
        let mut images = vec![vec![Poly::zero(m); m + 1]; m + 1];
        for a in 1..=m {
            for b in 1..=m {
                if a != b {
                    images[a][b] = gens[a][b].apply(f)?;
                }
            }
        }
        let mut failures = Vec::new();
        for (qi, &(a, b, c, d)) in quads.iter().enumerate() {
            let lhs = gens[a][b]
                .apply(&images[c][d])?
                .sub(&gens[c][d].apply(&images[a][b])?);
            let mut rhs = Poly::zero(m);
            if delta(a, d) {
                rhs = rhs.add(&images[b][c]);
            }
            if delta(b, c) {
                rhs = rhs.add(&images[a][d]);
            }
            if delta(a, c) {
                rhs = rhs.sub(&images[b][d]);
            }
            if delta(b, d) {
                rhs = rhs.sub(&images[a][c]);
            }
            if lhs != rhs {
                failures.push((
                    qi,
                    format!(
                        "[dR({a},{b}), dR({c},{d})] on f = {f}: lhs = {lhs}, rhs = {rhs}"
                    ),
                ));
            }
        }
        Ok(failures)
    })?;

    let mut checks: Vec<Check> = quads
        .iter()
        .zip(witnesses)
        .map(|(&(a, b, c, d), w)| Check::from_witness(format!("eq1_a{a}_b{b}_c{c}_d{d}"), w))
        .collect();

    // antisymmetry of the generators themselves
    for a in 1..=m {
        for b in a + 1..=m {
            let ab = &gens[a][b];
            let ba = &gens[b][a];
            let w = crate::suites::catalog::sweep(&basis, |f: &Poly| {
                let lhs = ab.apply(f)?;
                let rhs = ba.apply(f)?.scale(-Coefficient::one());
                Ok((lhs != rhs).then(|| format!("f = {f}: dR({a},{b}) != -dR({b},{a})")))
            })?;
            checks.push(Check::from_witness(format!("antisymmetry_a{a}_b{b}"), w));
        }
    }

    Ok(SuiteReport::new("eq1", params.clone(), checks))
}
