//! Seeded random algebras for property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{central_extension, operator_extension, Cocycle2};
use crate::algebra::{
    builtin, make_algebra, parse_algebra_name, AlgebraSpec, BilinearForm, Flavor, LinearMap,
    RawAlgebra,
};
use crate::error::Result;
use crate::exactlin::scalar::{int, zero_vec};
use crate::exactlin::{Subspace, Vector};
use crate::homsolver::{solve_bilinear, solve_structures, BilinearKind, StructureKind};

fn small<R: Rng>(rng: &mut R) -> i64 {
    *[-2, -1, 0, 0, 1, 1, 2].choose(rng).expect("nonempty")
}

/// A random integer combination of the basis of `s`, nonzero when `s` is.
fn random_member<R: Rng>(rng: &mut R, s: &Subspace) -> Vector {
    let basis = s.basis_vectors();
    loop {
        let mut v = zero_vec(s.ambient_dim());
        for b in &basis {
            let c = int(small(rng));
            for (slot, x) in v.iter_mut().zip(b) {
                *slot += &c * x;
            }
        }
        if basis.is_empty() || v.iter().any(|x| *x != int(0)) {
            return v;
        }
    }
}

/// A Lie algebra of dimension at most `max_dim` (at least 2), grown from a
/// small seed by central extensions along random 2-cocycles and by adjoining
/// random derivations.
pub fn random_lie<R: Rng>(rng: &mut R, max_dim: usize) -> Result<AlgebraSpec> {
    let max_dim = max_dim.max(2);
    let seeds = ["abelian1", "abelian2", "nonabelian2", "heisenberg", "sl2"];
    let mut l = loop {
        let s = parse_algebra_name(seeds.choose(rng).expect("nonempty"))?;
        if s.dim() <= max_dim {
            break s;
        }
    };
    let target = rng.gen_range(l.dim()..=max_dim);
    while l.dim() < target {
        let n = l.dim();
        if rng.gen_bool(0.5) {
            let cocycles = solve_bilinear(&l, BilinearKind::SkewCocycle)?;
            let form = BilinearForm::from_vector(n, &random_member(rng, &cocycles))?;
            l = central_extension(&l, &Cocycle2::new(&l, form)?)?;
        } else {
            let ders = solve_structures(&l, StructureKind::DeltaDerivation(int(1)))?.space;
            let d = LinearMap::from_vector(n, &random_member(rng, &ders))?;
            l = operator_extension(&l, &d)?;
        }
    }
    let name = format!("random{}", l.dim());
    Ok(l.with_name(name))
}

/// A commutative algebra of dimension `1..=max_dim`: a builtin unital one, or
/// a random symmetric table (usually neither associative nor unital).
pub fn random_commutative<R: Rng>(rng: &mut R, max_dim: usize) -> Result<AlgebraSpec> {
    let dim = rng.gen_range(1..=max_dim.max(1));
    match rng.gen_range(0..3) {
        0 => builtin("trunc_poly", &[dim as i64]),
        1 => builtin("cyclic_group_alg", &[dim as i64]),
        _ => {
            let mut raw = RawAlgebra::with_dim("randcomm", "u", dim, Flavor::GenericCommutative);
            for i in 0..dim {
                for j in i..dim {
                    let prod = (0..dim)
                        .map(|k| (k, int(small(rng))))
                        .filter(|(_, c)| *c != int(0))
                        .collect();
                    raw.set_sym(i, j, prod);
                }
            }
            make_algebra(raw)
        }
    }
}

/// An anticommutative algebra of dimension `2..=max_dim`: a builtin Lie
/// algebra, or a random antisymmetric table (usually not Lie).
pub fn random_anticommutative<R: Rng>(rng: &mut R, max_dim: usize) -> Result<AlgebraSpec> {
    let max_dim = max_dim.max(2);
    if rng.gen_bool(0.4) {
        return random_lie(rng, max_dim);
    }
    let dim = rng.gen_range(2..=max_dim);
    let mut raw = RawAlgebra::with_dim("randanti", "v", dim, Flavor::GenericAnticommutative);
    for i in 0..dim {
        for j in i + 1..dim {
            let prod = (0..dim)
                .map(|k| (k, int(small(rng))))
                .filter(|(_, c)| *c != int(0))
                .collect();
            raw.set_anti(i, j, prod);
        }
    }
    make_algebra(raw)
}
