//! Dimension oracle: exact kernel computations for the first- and
//! second-order operators on homogeneous spaces, compared against the
//! closed-form dimension counts.

use crate::clifford::Blade;
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::linalg::MatrixExact;
use crate::poly::{monomials_of_degree, Monomial, Poly};
use crate::suites::{Check, SuiteParams, SuiteReport};
use std::collections::BTreeMap;

/// Index of the full homogeneous basis of degree k: monomials of degree k
/// tensored with all blades, monomial-major.
struct DegreeBasis {
    m: usize,
    keys: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl DegreeBasis {
    fn new(m: usize, k: usize) -> Self {
        let blades = 4usize.pow(m as u32) as u16;
        let mut keys = Vec::new();
        for exps in monomials_of_degree(m, k) {
            for b in 0..blades {
                keys.push(Monomial {
                    exps,
                    blade: Blade(b),
                });
            }
        }
        let index = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        DegreeBasis { m, keys, index }
    }

    fn len(&self) -> usize {
        self.keys.len()
    }
}

/// Matrix of a degree-lowering operator from the degree-k basis to the
/// degree-(k - drop) basis; columns hold operator images.
fn operator_matrix(
    m: usize,
    k: usize,
    drop: usize,
    apply: impl Fn(&Poly) -> Poly,
) -> MatrixExact {
    let domain = DegreeBasis::new(m, k);
    let codomain = DegreeBasis::new(m, k - drop);
    let mut mat = MatrixExact::zero(codomain.len(), domain.len());
    for (col, key) in domain.keys.iter().enumerate() {
        let f = Poly::term(m, key.exps, key.blade, Coefficient::one());
        for (out_key, c) in apply(&f).terms() {
            let row = codomain.index[out_key];
            mat.set(row, col, *c);
        }
    }
    assert_eq!(domain.m, codomain.m);
    mat
}

fn binomial(n: i64, r: i64) -> usize {
    if r < 0 || n < 0 || r > n {
        return 0;
    }
    let mut acc = 1u128;
    for i in 0..r as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc as usize
}

/// The supported instances keep dense exact elimination at desk scale.
const DIRAC_INSTANCES: [(usize, usize); 8] = [
    (2, 1),
    (2, 2),
    (2, 3),
    (3, 1),
    (3, 2),
    (3, 3),
    (4, 1),
    (4, 2),
];

pub fn dims(params: &SuiteParams) -> Result<SuiteReport> {
    let pairs: Vec<(usize, usize)> = match (params.m, params.k) {
        (Some(m), Some(k)) => {
            if !DIRAC_INSTANCES.contains(&(m, k)) {
                return Err(Error::usage(format!(
                    "dims supports (m, k) in {DIRAC_INSTANCES:?}, got ({m}, {k})"
                )));
            }
            vec![(m, k)]
        }
        (None, None) => DIRAC_INSTANCES.to_vec(),
        _ => {
            return Err(Error::usage(
                "dims takes either both m and k or neither".to_string(),
            ))
        }
    };

    let mut checks = Vec::new();
    for &(m, k) in &pairs {
        let scale = 1usize << (2 * m);

        // kernel of the first-order operator on the degree-k space
        let mat = operator_matrix(m, k, 1, |f| f.dirac());
        let cols = mat.cols();
        let small = cols <= 256;
        let (rank, kernel) = if small {
            let basis = mat.kernel_basis();
            // every kernel vector must map to exactly zero
            let mut witness = None;
            for v in &basis {
                if mat.mat_vec(v).iter().any(|c| !c.is_zero()) {
                    witness = Some("kernel vector not annihilated".to_string());
                    break;
                }
            }
            checks.push(Check::from_witness(
                format!("kernel_vectors_annihilate_m{m}_k{k}"),
                witness,
            ));
            (cols - basis.len(), basis.len())
        } else {
            let rank = mat.into_rank();
            (rank, cols - rank)
        };
        let expected = scale * binomial((k + m - 2) as i64, k as i64);
        checks.push(Check::from_witness(
            format!("dirac_kernel_m{m}_k{k}"),
            (kernel != expected).then(|| {
                format!(
                    "kernel dimension {kernel} (rank {rank} of {cols} columns), expected {expected}"
                )
            }),
        ));

        // kernel of the second-order operator, compared against both
        // readings of the harmonic dimension count
        if k >= 2 {
            let mat = operator_matrix(m, k, 2, |f| f.dirac().dirac());
            let cols = mat.cols();
            let rank = mat.into_rank();
            let kernel = cols - rank;
            let n = (k + m - 1) as i64;
            let n3 = (k + m - 3) as i64;
            let printed = scale * (binomial(n, k as i64) - binomial(n3, k as i64));
            let lower = scale * (binomial(n, (m - 1) as i64) - binomial(n3, (m - 1) as i64));
            let reading = match (kernel == printed, kernel == lower) {
                (true, true) => "both_readings",
                (false, true) => "second_index_m_minus_1",
                (true, false) => "second_index_k",
                (false, false) => "neither",
            };
            checks.push(Check::from_witness(
                format!("laplace_kernel_m{m}_k{k}_matches_{reading}"),
                (reading == "neither").then(|| {
                    format!(
                        "kernel dimension {kernel}; second-index-k reading gives {printed}, \
                         second-index-(m-1) reading gives {lower}"
                    )
                }),
            ));
        }
    }

    Ok(SuiteReport::new("dims", params.clone(), checks))
}
