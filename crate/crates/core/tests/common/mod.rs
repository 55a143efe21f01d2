//! Property checks shared by the property suite and the acceptance run.
//!
//! Every check recomputes its identity directly from the structure constants
//! instead of reusing the compiled equation systems.

#![allow(dead_code)]

use homlie::algebra::{parse_algebra_name, AlgebraSpec, BilinearForm, LinearMap};
use homlie::constructions::{operator_extension, random_lie};
use homlie::exactlin::scalar::{frac, int, is_zero_vec};
use homlie::exactlin::{Matrix, Vector};
use homlie::homsolver::{f_t, solve_bilinear, solve_structures, BilinearKind, StructureKind};
use homlie::modstruct::{conjugate, equivariance_witness, exp_ad, hom_jacobiator, is_submodule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const BUILTINS: &[&str] = &[
    "sl2",
    "sl3",
    "gl2",
    "gl3",
    "so3",
    "so4",
    "sp2",
    "heisenberg",
    "abelian2",
    "abelian3",
    "nonabelian2",
    "trunc_poly2",
    "trunc_poly3",
    "cyclic_group_alg2",
    "cyclic_group_alg3",
];

pub fn builtins() -> Vec<AlgebraSpec> {
    BUILTINS
        .iter()
        .map(|n| parse_algebra_name(n).unwrap())
        .collect()
}

/// Random Lie algebras of dimension at most 5, seeds `0..count`.
pub fn random_lie_algebras(count: u64) -> Vec<AlgebraSpec> {
    (0..count)
        .map(|seed| random_lie(&mut ChaCha8Rng::seed_from_u64(seed), 5).unwrap())
        .collect()
}

pub fn small_vec(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| int(rng.gen_range(-3..=3))).collect()
}

/// `[[x,y],φ(z)] + [[z,x],φ(y)] + [[y,z],φ(x)] = 0` on all basis triples.
fn satisfies_hom_jacobi(alg: &AlgebraSpec, phi: &LinearMap) -> bool {
    let n = alg.dim();
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                is_zero_vec(
                    &hom_jacobiator(alg, phi, &alg.unit(a), &alg.unit(b), &alg.unit(c)).unwrap(),
                )
            })
        })
    })
}

/// `f([x,y],z) + f([z,x],y) + f([y,z],x) = 0` on all basis triples.
fn is_asym_cocycle(alg: &AlgebraSpec, f: &BilinearForm) -> bool {
    let n = alg.dim();
    let m = |i: usize, j: usize| alg.multiply(&alg.unit(i), &alg.unit(j)).unwrap();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let s = f.eval(&m(x, y), &alg.unit(z))
                    + f.eval(&m(z, x), &alg.unit(y))
                    + f.eval(&m(y, z), &alg.unit(x));
                s == int(0)
            })
        })
    })
}

pub const DELTAS: [(i64, i64); 3] = [(-1, 1), (1, 2), (2, 1)];

/// Runs every property that applies to `alg`; returns the first failure.
pub fn check_properties(alg: &AlgebraSpec, seed: u64) -> Result<(), String> {
    let name = alg.name().to_string();
    let n = alg.dim();
    let fail = |what: &str| Err(format!("{name}: {what}"));
    let lie = solve_structures(alg, StructureKind::HomLie).unwrap();
    for phi in lie.basis_maps() {
        if !satisfies_hom_jacobi(alg, &phi) {
            return fail("solved basis map violates the Hom-Jacobi identity");
        }
    }
    if !alg.is_lie() {
        // Unital commutative associative algebras: id is Hom-cyclic.
        let cyc = solve_structures(alg, StructureKind::HomCycl).unwrap();
        if !cyc.contains(&LinearMap::identity(n)).unwrap() {
            return fail("id not Hom-cyclic");
        }
        return Ok(());
    }
    if !lie.contains(&LinearMap::identity(n)).unwrap() {
        return fail("id not in HomLie");
    }
    if !is_submodule(alg, &lie.space).unwrap() {
        return fail("HomLie is not a submodule");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..3 {
        let h = small_vec(&mut rng, n);
        let phi = LinearMap::from_vector(n, &small_vec(&mut rng, n * n)).unwrap();
        if let Some((w, _)) = equivariance_witness(alg, &h, &phi).unwrap() {
            return fail(&format!("J_(h•φ) ≠ h•J_φ at {w:?}"));
        }
    }

    for (p, q) in DELTAS {
        let delta = frac(p, q);
        let d = solve_structures(alg, StructureKind::DeltaDerivation(delta.clone())).unwrap();
        if !d.space.is_subspace_of(&lie.space).unwrap() {
            return fail(&format!("δ = {p}/{q} derivations not Hom-Lie"));
        }
        for der in d.basis_maps() {
            let ext = operator_extension(alg, &der).unwrap();
            let mut alpha = Matrix::identity(n + 1);
            alpha.set(n, n, frac(q, p));
            let alpha = LinearMap::new(alpha).unwrap();
            if !satisfies_hom_jacobi(&ext, &alpha) {
                return fail(&format!("δ = {p}/{q}: α is not Hom-Lie on L ⊕ KD"));
            }
        }
    }

    let forms = solve_bilinear(alg, BilinearKind::SymInvariantForm).unwrap();
    for form in forms.basis_vectors() {
        let form = BilinearForm::from_vector(n, &form).unwrap();
        for phi in lie.basis_maps() {
            for t in 0..n {
                let f = f_t(alg, &form, &phi, &alg.unit(t)).unwrap();
                if !is_asym_cocycle(alg, &f) {
                    return fail("f_t is not a cocycle");
                }
            }
        }
    }

    for x in 0..n {
        if exp_ad(alg, &alg.unit(x)).is_err() {
            continue;
        }
        for phi in lie.basis_maps() {
            let c = conjugate(alg, &phi, &alg.unit(x)).unwrap();
            if !satisfies_hom_jacobi(alg, &c) {
                return fail(&format!("conjugation by exp(ad e_{x}) leaves HomLie"));
            }
        }
    }
    Ok(())
}
