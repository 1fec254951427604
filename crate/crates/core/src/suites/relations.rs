//! Algebra-relation suites: the anticommutator rules and skew Weyl calculus,
//! invariance of the rotation operators under the symmetry algebras, and the
//! basic monogenic generators.

use crate::clifford::{enumerate_specs, GenSign, GeneratorId, Multivector};
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::lie::{cartan, omega, rank, root_neg_short, root_short, so_generator};
use crate::op::{
    dirac_op, euler_op, euler_shifted_op, laplace_op, xi_op, OperatorExpr,
};
use crate::poly::{monogenic_generator, partner_generator, Poly};
use crate::suites::catalog::{basis_terms, select, sweep};
use crate::suites::{sample_indices, Check, SuiteParams, SuiteReport};

/// Generator anticommutators, vector squares, skew Weyl relation and the
/// cross anticommutators of the coordinate calculus.
pub fn relations2(params: &SuiteParams) -> Result<SuiteReport> {
    let m = params.m.unwrap_or(4);
    if !(2..=4).contains(&m) {
        return Err(Error::usage(format!(
            "relations2 supports 2 <= m <= 4, got m={m}"
        )));
    }
    let degree = params.max_degree.unwrap_or(4);
    if degree > 6 {
        return Err(Error::usage(format!(
            "relations2 caps the basis degree at 6, got {degree}"
        )));
    }
    let mut checks = Vec::new();

    // anticommutator rules on the generators themselves
    for j in 1..=m {
        for l in 1..=m {
            let pj = Multivector::generator(m, GeneratorId::new(j, GenSign::Plus));
            let pl = Multivector::generator(m, GeneratorId::new(l, GenSign::Plus));
            let nj = Multivector::generator(m, GeneratorId::new(j, GenSign::Minus));
            let nl = Multivector::generator(m, GeneratorId::new(l, GenSign::Minus));
            let anti = |x: &Multivector, y: &Multivector| x.mul(y).add(&y.mul(x));
            let pp = anti(&pj, &pl);
            checks.push(Check::from_witness(
                format!("anticomm_fwd_fwd_j{j}_l{l}"),
                (!pp.is_zero()).then(|| format!("{{e{j}+, e{l}+}} = {pp}")),
            ));
            let mm = anti(&nj, &nl);
            checks.push(Check::from_witness(
                format!("anticomm_bwd_bwd_j{j}_l{l}"),
                (!mm.is_zero()).then(|| format!("{{e{j}-, e{l}-}} = {mm}")),
            ));
            let pm = anti(&pj, &nl);
            let expected = if j == l {
                Multivector::one(m)
            } else {
                Multivector::zero(m)
            };
            checks.push(Check::from_witness(
                format!("anticomm_fwd_bwd_j{j}_l{l}"),
                (pm != expected).then(|| format!("{{e{j}+, e{l}-}} = {pm}")),
            ));
        }
    }
    for j in 1..=m {
        let e = Multivector::basis_vector(m, j);
        let sq = e.mul(&e);
        checks.push(Check::from_witness(
            format!("vector_square_j{j}"),
            (sq != Multivector::one(m)).then(|| format!("e{j}^2 = {sq}")),
        ));
    }

    let basis = select(basis_terms(m, degree), params);

    // skew Weyl: d_j x_j - x_j d_j = 1 extensionally
    for j in 1..=m {
        let w = sweep(&basis, |f: &Poly| {
            let lhs = f.xi_mul(j).d_apply(j).sub(&f.d_apply(j).xi_mul(j));
            Ok((lhs != *f).then(|| format!("f = {f}, (d_{j} x_{j} - x_{j} d_{j}) f = {lhs}")))
        })?;
        checks.push(Check::from_witness(format!("skew_weyl_j{j}"), w));
    }

    // cross anticommutators vanish for distinct coordinates
    for j in 1..=m {
        for l in 1..=m {
            if j == l {
                continue;
            }
            let w = sweep(&basis, |f: &Poly| {
                let xx = f.xi_mul(l).xi_mul(j).add(&f.xi_mul(j).xi_mul(l));
                if !xx.is_zero() {
                    return Ok(Some(format!("{{x_{j}, x_{l}}} f = {xx} at f = {f}")));
                }
                let dd = f.d_apply(l).d_apply(j).add(&f.d_apply(j).d_apply(l));
                if !dd.is_zero() {
                    return Ok(Some(format!("{{d_{j}, d_{l}}} f = {dd} at f = {f}")));
                }
                let dx = f.xi_mul(l).d_apply(j).add(&f.d_apply(j).xi_mul(l));
                if !dx.is_zero() {
                    return Ok(Some(format!("{{d_{j}, x_{l}}} f = {dx} at f = {f}")));
                }
                Ok(None)
            })?;
            checks.push(Check::from_witness(format!("cross_anticomm_j{j}_l{l}"), w));
        }
    }

    // the grading action agrees with its composed definition
    let euler = euler_op(m);
    let w = sweep(&basis, |f: &Poly| {
        let composed = euler.apply(f)?;
        Ok((composed != f.euler())
            .then(|| format!("f = {f}: composed grading = {composed}, direct = {}", f.euler())))
    })?;
    checks.push(Check::from_witness("euler_matches_composed".to_string(), w));

    // second-order action on coordinate squares
    for j in 1..=m {
        let sq = Poly::one(m).xi_mul(j).xi_mul(j);
        let lhs = sq.dirac().dirac();
        let rhs = Poly::one(m).scale(Coefficient::from_int(2));
        checks.push(Check::from_witness(
            format!("laplace_on_square_j{j}"),
            (lhs != rhs).then(|| format!("dd x_{j}^2 [1] = {lhs}")),
        ));
    }

    Ok(SuiteReport::new("relations2", params.clone(), checks))
}

/// Commutation of the rotation family with the first-order symmetry triple
/// and of the angular family with the second-order one.
pub fn invariance(params: &SuiteParams) -> Result<SuiteReport> {
    let m = params.m.unwrap_or(3);
    if !(2..=4).contains(&m) {
        return Err(Error::usage(format!(
            "invariance supports 2 <= m <= 4, got m={m}"
        )));
    }
    let degree = params.max_degree.unwrap_or(3);
    if degree > 4 {
        return Err(Error::usage(format!(
            "invariance caps the basis degree at 4, got {degree}"
        )));
    }
    let basis = select(basis_terms(m, degree), params);
    let mut checks = Vec::new();

    let first_order: Vec<(&str, OperatorExpr)> = vec![
        ("dirac", dirac_op(m)),
        ("xi", xi_op(m)),
        ("euler_shift", euler_shifted_op(m)),
    ];
    let second_order: Vec<(&str, OperatorExpr)> = vec![
        ("laplace", laplace_op(m)),
        ("xi_sq", OperatorExpr::Compose(vec![xi_op(m), xi_op(m)])),
        ("euler_shift", euler_shifted_op(m)),
    ];

    let mut comm_check = |name: String, a: &OperatorExpr, b: &OperatorExpr| -> Result<()> {
        let w = sweep(&basis, |f: &Poly| {
            let c = OperatorExpr::commutator_apply(a, b, f)?;
            Ok((!c.is_zero()).then(|| format!("f = {f}: commutator = {c}")))
        })?;
        checks.push(Check::from_witness(name, w));
        Ok(())
    };

    for a in 1..=m {
        for b in a + 1..=m {
            let rot = so_generator(m, a, b)?;
            for (label, op) in &first_order {
                comm_check(format!("rotation_a{a}_b{b}_commutes_{label}"), &rot, op)?;
            }
            let ang = omega(m, a, b)?;
            for (label, op) in &second_order {
                comm_check(format!("angular_a{a}_b{b}_commutes_{label}"), &ang, op)?;
            }
        }
    }

    // the Cartan basis inherits the invariance; spot the named combinations
    for a in 1..=rank(m) {
        let h = cartan(m, a)?;
        for (label, op) in &first_order {
            comm_check(format!("cartan_{a}_commutes_{label}"), &h, op)?;
        }
    }
    if rank(m) >= 2 {
        let roots = [
            ("root_diff_12", crate::lie::root_diff(m, 1, 2)?),
            ("root_sum_12", crate::lie::root_sum(m, 1, 2)?),
            ("root_neg_sum_12", crate::lie::root_neg_sum(m, 1, 2)?),
        ];
        for (root_label, root) in &roots {
            for (label, op) in &first_order {
                comm_check(format!("{root_label}_commutes_{label}"), root, op)?;
            }
        }
    }
    if m % 2 == 1 {
        for a in 1..=rank(m) {
            let u = root_short(m, a)?;
            let v = root_neg_short(m, a)?;
            for (label, op) in &first_order {
                comm_check(format!("short_root_{a}_commutes_{label}"), &u, op)?;
                comm_check(format!("neg_short_root_{a}_commutes_{label}"), &v, op)?;
            }
        }
    }

    Ok(SuiteReport::new("invariance", params.clone(), checks))
}

/// The alternating generators: annihilation by the first-order operator,
/// grading eigenvalues, the recursion against the partner sequence and the
/// fixed-degree reading of the grading action on coordinate powers.
pub fn monogenic(params: &SuiteParams) -> Result<SuiteReport> {
    let m = params.m.unwrap_or(4);
    if !(2..=5).contains(&m) {
        return Err(Error::usage(format!(
            "monogenic supports 2 <= m <= 5, got m={m}"
        )));
    }
    let k_max = params.k.unwrap_or(6);
    if k_max > 10 {
        return Err(Error::usage(format!("monogenic caps k at 10, got {k_max}")));
    }
    let mut checks = Vec::new();

    // seeded spec subset for the right-coefficient sweep
    let all_specs: Vec<_> = enumerate_specs(m).collect();
    let picks = sample_indices(all_specs.len(), params.sample_size, params.seed);
    let specs: Vec<_> = picks.iter().map(|&i| all_specs[i].clone()).collect();

    let euler = euler_op(m);
    for k in 0..=k_max {
        let g = monogenic_generator(k, m);
        let dg = g.dirac();
        checks.push(Check::from_witness(
            format!("dirac_annihilates_generator_k{k}"),
            (!dg.is_zero()).then(|| format!("dirac g_{k} = {dg}")),
        ));

        let mut witness = None;
        for spec in &specs {
            let img = g.right_mul(&spec.realize()).dirac();
            if !img.is_zero() {
                witness = Some(format!("dirac (g_{k} {spec}) = {img}"));
                break;
            }
        }
        checks.push(Check::from_witness(
            format!("dirac_annihilates_generator_times_spec_k{k}"),
            witness,
        ));

        let eg = euler.apply(&g)?;
        let expect = g.scale(Coefficient::from_int(k as i64));
        checks.push(Check::from_witness(
            format!("euler_eigenvalue_k{k}"),
            (eg != expect).then(|| format!("E g_{k} = {eg}, expected {k} g_{k}")),
        ));

        if k >= 1 {
            let f_prev = partner_generator(k - 1, m);
            let rebuilt = f_prev.xi_mul(2).sub(&f_prev.xi_mul(1));
            checks.push(Check::from_witness(
                format!("generator_recursion_k{k}"),
                (rebuilt != g).then(|| format!("(x2 - x1) f_{} = {rebuilt} != g_{k}", k - 1)),
            ));
            let kc = Coefficient::from_int(k as i64);
            let d1 = g.d_apply(1);
            let d2 = g.d_apply(2);
            let ok = d1 == f_prev.scale(-kc) && d2 == f_prev.scale(kc);
            checks.push(Check::from_witness(
                format!("generator_derivative_k{k}"),
                (!ok).then(|| format!("d_1 g_{k} = {d1}, d_2 g_{k} = {d2}")),
            ));
        }
    }

    // The grading operator fixes the degree of a coordinate power: E x_j^k [1]
    // is k x_j^k [1], not k x_j^{k-1} [1]. Both readings are evaluated so the
    // report records which one the calculus supports.
    let mut witness = None;
    for k in 1..=k_max {
        let mut p = Poly::one(m);
        for _ in 0..k {
            p = p.xi_mul(1);
        }
        let ep = euler.apply(&p)?;
        let grading = p.scale(Coefficient::from_int(k as i64));
        let mut lowered = Poly::one(m);
        for _ in 0..k - 1 {
            lowered = lowered.xi_mul(1);
        }
        let lowering = lowered.scale(Coefficient::from_int(k as i64));
        if ep != grading || ep == lowering {
            witness = Some(format!(
                "E x_1^{k} [1] = {ep}; grading reading = {grading}, lowering reading = {lowering}"
            ));
            break;
        }
    }
    checks.push(Check::from_witness(
        "euler_power_action_is_grading_not_lowering".to_string(),
        witness,
    ));

    Ok(SuiteReport::new("monogenic", params.clone(), checks))
}
