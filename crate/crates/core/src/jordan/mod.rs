//! Jordan products `½(φ∘ψ + ψ∘φ)` of Hom-Lie structures.

use serde::Serialize;
use serde_json::json;

use crate::algebra::{builtin, make_algebra, AlgebraSpec, Flavor, LinearMap, RawAlgebra};
use crate::constructions::tensor_lie;
use crate::error::{Error, Result};
use crate::exactlin::scalar::{format_scalar, frac, int, is_zero_vec, unit_vec};
use crate::exactlin::{Scalar, Vector};
use crate::homsolver::{first_violation, solve_structures, HomSolution, StructureKind};
use crate::modstruct::hom_jacobiator;

pub fn jordan_product(phi: &LinearMap, psi: &LinearMap) -> Result<LinearMap> {
    Ok(phi
        .compose(psi)?
        .add(&psi.compose(phi)?)?
        .scale(&frac(1, 2)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureWitness {
    pub phi: LinearMap,
    pub psi: LinearMap,
    pub product: LinearMap,
    /// Basis tuple where the product fails the defining identity, with the residual.
    pub violating: Vec<usize>,
    pub residual: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureVerdict {
    pub closed: bool,
    pub witness: Option<ClosureWitness>,
}

fn map_json(m: &LinearMap) -> Vec<String> {
    m.to_vector().iter().map(format_scalar).collect()
}

impl ClosureVerdict {
    pub fn to_json(&self) -> serde_json::Value {
        match &self.witness {
            None => json!({ "closed": self.closed }),
            Some(w) => json!({
                "closed": self.closed,
                "witness": {
                    "phi": map_json(&w.phi),
                    "psi": map_json(&w.psi),
                    "product": map_json(&w.product),
                    "violating": w.violating,
                    "residual": w.residual.iter().map(format_scalar).collect::<Vec<_>>(),
                }
            }),
        }
    }
}

/// Whether the Jordan product of every pair of basis maps stays in `s`.
pub fn closure_check(s: &HomSolution) -> Result<ClosureVerdict> {
    let maps = s.basis_maps();
    for (i, phi) in maps.iter().enumerate() {
        for psi in &maps[i..] {
            let product = jordan_product(phi, psi)?;
            if s.contains(&product)? {
                continue;
            }
            // Not in the solved space, so some defining equation fails.
            let (violating, residual) =
                first_violation(&s.algebra, &s.kind, &product).ok_or_else(|| {
                    Error::InvalidParameter("solution space is not the full solution set".into())
                })?;
            return Ok(ClosureVerdict {
                closed: false,
                witness: Some(ClosureWitness {
                    phi: phi.clone(),
                    psi: psi.clone(),
                    product,
                    violating,
                    residual,
                }),
            });
        }
    }
    Ok(ClosureVerdict {
        closed: true,
        witness: None,
    })
}

#[derive(Clone, Debug)]
pub struct JordanAlgebra {
    /// Commutative algebra on the basis maps of the solution space.
    pub algebra: AlgebraSpec,
    /// `(x²∘y)∘x = x²∘(y∘x)` on all pairs of basis elements.
    pub jordan_identity_holds: bool,
}

/// Structure constants of the Jordan algebra carried by a closed solution space.
pub fn jordan_structure_constants(
    s: &HomSolution,
    verdict: &ClosureVerdict,
) -> Result<JordanAlgebra> {
    if !verdict.closed {
        return Err(Error::InvalidParameter(
            "solution space is not closed under the Jordan product".into(),
        ));
    }
    let maps = s.basis_maps();
    let k = maps.len();
    let names = (1..=k).map(|i| format!("J{i}")).collect();
    let mut raw = RawAlgebra::new(
        format!("Jordan({})", s.algebra.name()),
        names,
        Flavor::GenericCommutative,
    );
    for i in 0..k {
        for j in i..k {
            let p = jordan_product(&maps[i], &maps[j])?;
            let coords = s.space.coordinates(&p.to_vector())?.ok_or_else(|| {
                Error::InvalidParameter(
                    "solution space is not closed under the Jordan product".into(),
                )
            })?;
            let prod: Vec<(usize, Scalar)> = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != int(0))
                .collect();
            raw.set_sym(i, j, prod);
        }
    }
    let algebra = make_algebra(raw)?;
    let mut holds = true;
    'pairs: for i in 0..k {
        let x = algebra.unit(i);
        let x2 = algebra.multiply(&x, &x)?;
        for j in 0..k {
            let y = algebra.unit(j);
            let lhs = algebra.multiply(&algebra.multiply(&x2, &y)?, &x)?;
            let rhs = algebra.multiply(&x2, &algebra.multiply(&y, &x)?)?;
            if lhs != rhs {
                holds = false;
                break 'pairs;
            }
        }
    }
    Ok(JordanAlgebra {
        algebra,
        jordan_identity_holds: holds,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    /// Truncation `K[t]/(t^m)` used.
    pub m: usize,
    /// `α = E_{p,q}`: `t^q ↦ t^p`.
    pub alpha: (usize, usize),
    /// `φ∘ψ = φ` on the two-dimensional factor.
    pub phi_psi_is_phi: bool,
    pub left_in_homlie: bool,
    pub right_in_homlie: bool,
    pub product_in_homlie: bool,
    pub violating: Vec<usize>,
    pub residual: Vec<String>,
    /// Residual recomputed from the product alone.
    pub residual_rechecked: bool,
}

impl CounterexampleReport {
    pub fn verified(&self) -> bool {
        self.phi_psi_is_phi
            && self.left_in_homlie
            && self.right_in_homlie
            && !self.product_in_homlie
            && self.residual_rechecked
    }
}

/// On `L = ⟨x, y | [x,y] = x⟩` take `φ: x ↦ y` and `ψ: x ↦ x`. Then `1⊗φ` and
/// `α⊗ψ` are Hom-Lie structures on `L ⊗ K[t]/(t^m)`, while their Jordan product
/// `½ α⊗φ` is not, for a suitable matrix unit `α`. Searches `m = 3..=8`.
pub fn counterexample_suite() -> Result<CounterexampleReport> {
    let l = builtin("nonabelian2", &[])?;
    let (x, y) = (0, 1);
    let phi = LinearMap::from_vector(2, &unit_vec(4, y * 2 + x))?;
    let psi = LinearMap::from_vector(2, &unit_vec(4, x * 2 + x))?;
    let phi_psi_is_phi = phi.compose(&psi)? == phi;
    for m in 3..=8 {
        let a = builtin("trunc_poly", &[m as i64])?;
        let big = tensor_lie(&a, &l)?;
        let solved = solve_structures(&big, StructureKind::HomLie)?;
        let left = LinearMap::identity(m).tensor(&phi);
        for p in 0..m {
            for q in 0..m {
                let alpha = LinearMap::from_vector(m, &unit_vec(m * m, p * m + q))?;
                let right = alpha.tensor(&psi);
                let product = jordan_product(&left, &right)?;
                if solved.contains(&product)? {
                    continue;
                }
                let Some((violating, residual)) =
                    first_violation(&big, &StructureKind::HomLie, &product)
                else {
                    continue;
                };
                let recheck = hom_jacobiator(
                    &big,
                    &product,
                    &big.unit(violating[0]),
                    &big.unit(violating[1]),
                    &big.unit(violating[2]),
                )?;
                return Ok(CounterexampleReport {
                    m,
                    alpha: (p, q),
                    phi_psi_is_phi,
                    left_in_homlie: solved.contains(&left)?,
                    right_in_homlie: solved.contains(&right)?,
                    product_in_homlie: false,
                    residual_rechecked: recheck == residual && !is_zero_vec(&recheck),
                    violating,
                    residual: residual.iter().map(format_scalar).collect(),
                });
            }
        }
    }
    Err(Error::InvalidParameter(
        "no truncation up to m = 8 separates the Jordan product".into(),
    ))
}
