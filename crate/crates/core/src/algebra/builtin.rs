//! Builtin algebras.
//!
//! Matrix Lie algebras use these bases (indices 1-based in names):
//!
//! * `sl2`: `(e-, h, e+)` with `[e-,h] = -e-`, `[e+,h] = e+`, `[e-,e+] = h`.
//! * `sl(n)`, n ≥ 3: `E_ij` (i ≠ j, row-major order) followed by `H_i = E_ii - E_{i+1,i+1}`.
//! * `gl(n)`: all `E_ij`, row-major.
//! * `so(n)`: `A_ij = E_ij - E_ji`, i < j.
//! * `sp(2m)`: matrices `[[A, B], [C, -Aᵀ]]` preserving `J = [[0, I], [-I, 0]]`, with
//!   `B`, `C` symmetric. Basis: `A`-part `E_ij` (named `A_ij`), then `B`-part
//!   `E_ij + E_ji` (i ≤ j, `E_ii` on the diagonal, named `B_ij`), then `C_ij` likewise.

use num_traits::Zero;

use super::{make_algebra, AlgebraSpec, Flavor, RawAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::scalar::{int, one};
use crate::exactlin::{express_in_basis, Matrix, Scalar, Vector};

pub const BUILTIN_NAMES: &[&str] = &[
    "sl",
    "gl",
    "so",
    "sp",
    "heisenberg",
    "abelian",
    "nonabelian2",
    "trunc_poly",
    "cyclic_group_alg",
];

/// Builtin algebra by family name and parameters.
pub fn builtin(name: &str, params: &[i64]) -> Result<AlgebraSpec> {
    let p = |default: Option<i64>| -> Result<i64> {
        params
            .first()
            .copied()
            .or(default)
            .ok_or_else(|| Error::InvalidParameter(format!("{name} needs a size parameter")))
    };
    let size = |min: i64, v: i64| -> Result<usize> {
        if v < min {
            Err(Error::InvalidParameter(format!(
                "{name}({v}): need at least {min}"
            )))
        } else {
            Ok(v as usize)
        }
    };
    match name {
        "sl" => {
            let n = size(2, p(None)?)?;
            if n == 2 {
                sl2()
            } else {
                sl(n)
            }
        }
        "gl" => gl(size(1, p(None)?)?),
        "so" => so(size(2, p(None)?)?),
        "sp" => {
            let n = p(None)?;
            if n < 2 || n % 2 != 0 {
                return Err(Error::InvalidParameter(format!(
                    "sp({n}): need an even size >= 2"
                )));
            }
            sp(n as usize / 2)
        }
        "heisenberg" => heisenberg(size(1, p(Some(1))?)?),
        "abelian" => abelian(size(1, p(None)?)?),
        "nonabelian2" => nonabelian2(),
        "trunc_poly" => trunc_poly(size(1, p(None)?)?),
        "cyclic_group_alg" => cyclic_group_alg(size(1, p(None)?)?),
        other => Err(Error::UnknownAlgebra(other.to_string())),
    }
}

/// Parses compact names such as `sl3`, `sp4`, `heisenberg`, `trunc_poly2`, `nonabelian2`.
pub fn parse_algebra_name(s: &str) -> Result<AlgebraSpec> {
    if s == "nonabelian2" {
        return nonabelian2();
    }
    let split = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (family, digits) = s.split_at(split);
    if !BUILTIN_NAMES.contains(&family) || family == "nonabelian2" {
        return Err(Error::UnknownAlgebra(s.to_string()));
    }
    let params: Vec<i64> = if digits.is_empty() {
        Vec::new()
    } else {
        vec![digits
            .parse()
            .map_err(|_| Error::UnknownAlgebra(s.to_string()))?]
    };
    builtin(family, &params)
}

/// The triple `(e, h, f)` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h` in the `sl2` basis.
pub fn sl2_standard_triple() -> (Vector, Vector, Vector) {
    (
        vec![int(0), int(0), int(2)],
        vec![int(0), int(-2), int(0)],
        vec![int(1), int(0), int(0)],
    )
}

fn sl2() -> Result<AlgebraSpec> {
    let mut raw = RawAlgebra::new(
        "sl2",
        vec!["e-".into(), "h".into(), "e+".into()],
        Flavor::Lie,
    );
    raw.set_anti(0, 1, vec![(0, int(-1))]);
    raw.set_anti(2, 1, vec![(2, int(1))]);
    raw.set_anti(0, 2, vec![(1, int(1))]);
    make_algebra(raw)
}

fn unit_matrix(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m.set(i, j, one());
    m
}

/// Lie algebra spanned by the given matrices under the commutator.
fn from_matrix_basis(name: String, names: Vec<String>, mats: Vec<Matrix>) -> Result<AlgebraSpec> {
    let flat: Vec<Vector> = mats.iter().map(|m| m.as_row_major().to_vec()).collect();
    let mut raw = RawAlgebra::new(name, names, Flavor::Lie);
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            let c = mats[i].mul(&mats[j])?.sub(&mats[j].mul(&mats[i])?)?;
            if c.is_zero() {
                continue;
            }
            let coords = express_in_basis(&flat, c.as_row_major()).ok_or_else(|| {
                Error::InvalidParameter("matrix basis not closed under commutator".into())
            })?;
            let prod: Vec<(usize, Scalar)> = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            raw.set_anti(i, j, prod);
        }
    }
    make_algebra(raw)
}

fn sl(n: usize) -> Result<AlgebraSpec> {
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                names.push(format!("E{}{}", i + 1, j + 1));
                mats.push(unit_matrix(n, i, j));
            }
        }
    }
    for i in 0..n - 1 {
        names.push(format!("H{}", i + 1));
        mats.push(unit_matrix(n, i, i).sub(&unit_matrix(n, i + 1, i + 1))?);
    }
    from_matrix_basis(format!("sl{n}"), names, mats)
}

fn gl(n: usize) -> Result<AlgebraSpec> {
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            names.push(format!("E{}{}", i + 1, j + 1));
            mats.push(unit_matrix(n, i, j));
        }
    }
    from_matrix_basis(format!("gl{n}"), names, mats)
}

fn so(n: usize) -> Result<AlgebraSpec> {
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            names.push(format!("A{}{}", i + 1, j + 1));
            mats.push(unit_matrix(n, i, j).sub(&unit_matrix(n, j, i))?);
        }
    }
    from_matrix_basis(format!("so{n}"), names, mats)
}

fn sp(m: usize) -> Result<AlgebraSpec> {
    let n = 2 * m;
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for i in 0..m {
        for j in 0..m {
            names.push(format!("A{}{}", i + 1, j + 1));
            mats.push(unit_matrix(n, i, j).sub(&unit_matrix(n, m + j, m + i))?);
        }
    }
    for (tag, (ro, co)) in [("B", (0, m)), ("C", (m, 0))] {
        for i in 0..m {
            for j in i..m {
                names.push(format!("{tag}{}{}", i + 1, j + 1));
                let mut x = unit_matrix(n, ro + i, co + j);
                if i != j {
                    x = x.add(&unit_matrix(n, ro + j, co + i))?;
                }
                mats.push(x);
            }
        }
    }
    from_matrix_basis(format!("sp{n}"), names, mats)
}

fn heisenberg(k: usize) -> Result<AlgebraSpec> {
    let mut names: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    names.extend((1..=k).map(|i| format!("y{i}")));
    names.push("z".into());
    let name = if k == 1 {
        "heisenberg".to_string()
    } else {
        format!("heisenberg{k}")
    };
    let mut raw = RawAlgebra::new(name, names, Flavor::Lie);
    for i in 0..k {
        raw.set_anti(i, k + i, vec![(2 * k, one())]);
    }
    make_algebra(raw)
}

fn abelian(n: usize) -> Result<AlgebraSpec> {
    make_algebra(RawAlgebra::with_dim(
        format!("abelian{n}"),
        "a",
        n,
        Flavor::Lie,
    ))
}

fn nonabelian2() -> Result<AlgebraSpec> {
    let mut raw = RawAlgebra::new("nonabelian2", vec!["x".into(), "y".into()], Flavor::Lie);
    raw.set_anti(0, 1, vec![(0, one())]);
    make_algebra(raw)
}

fn monomial_names(m: usize) -> Vec<String> {
    (0..m)
        .map(|a| match a {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{a}"),
        })
        .collect()
}

/// `K[t]/(t^m)`.
fn trunc_poly(m: usize) -> Result<AlgebraSpec> {
    let mut raw = RawAlgebra::new(
        format!("trunc_poly{m}"),
        monomial_names(m),
        Flavor::CommutativeAssociative,
    )
    .grading((0..m as i64).collect());
    for a in 0..m {
        for b in 0..m {
            if a + b < m {
                raw.set(a, b, vec![(a + b, one())]);
            }
        }
    }
    make_algebra(raw)
}

/// `K[t]/(t^m - 1)`.
fn cyclic_group_alg(m: usize) -> Result<AlgebraSpec> {
    let mut raw = RawAlgebra::new(
        format!("cyclic_group_alg{m}"),
        monomial_names(m),
        Flavor::CommutativeAssociative,
    );
    for a in 0..m {
        for b in 0..m {
            raw.set(a, b, vec![((a + b) % m, one())]);
        }
    }
    make_algebra(raw)
}
