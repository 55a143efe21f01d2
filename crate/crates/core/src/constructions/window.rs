//! Degree window of `g ⊗ K[t, t⁻¹] ⊕ Kd ⊕ Kz`.
//!
//! Loop elements `x⊗tⁱ` with `|i| ≤ N` come first, ordered by degree and then by
//! the basis of the relevant grading component; `d` and `z` are the last two
//! basis elements. A loop bracket whose degree leaves the window is
//! [`Bracket::OutOfWindow`].

use num_traits::Zero;
use serde::Serialize;

use super::{check_cyclic_grading, describe, signed_power_name};
use crate::algebra::{AlgebraSpec, BilinearForm};
use crate::error::{Error, Result};
use crate::exactlin::scalar::{format_scalar, int, is_zero_vec, zero_vec};
use crate::exactlin::{Scalar, Subspace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Loop,
    Euler,
    Central,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowLabel {
    pub kind: BasisKind,
    /// Position in the basis of the grading component (the basis of `g` when untwisted).
    pub lie_index: Option<usize>,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bracket {
    Defined(Vec<(usize, Scalar)>),
    OutOfWindow,
}

/// A graded bracket with some products undefined.
#[derive(Clone, Debug)]
pub struct PartialAlgebra {
    name: String,
    basis_names: Vec<String>,
    labels: Vec<WindowLabel>,
    elements: Vec<Option<Vector>>,
    table: Vec<Bracket>,
    window: i64,
}

impl PartialAlgebra {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn labels(&self) -> &[WindowLabel] {
        &self.labels
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.labels[i].degree
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    /// The element of `g` underlying a loop basis vector.
    pub fn loop_element(&self, i: usize) -> Option<&Vector> {
        self.elements[i].as_ref()
    }

    pub fn euler_index(&self) -> usize {
        self.dim() - 2
    }

    pub fn central_index(&self) -> usize {
        self.dim() - 1
    }

    pub fn unit(&self, i: usize) -> Vector {
        crate::exactlin::scalar::unit_vec(self.dim(), i)
    }

    pub fn bracket(&self, i: usize, j: usize) -> &Bracket {
        &self.table[i * self.dim() + j]
    }

    pub fn is_defined(&self, i: usize, j: usize) -> bool {
        matches!(self.bracket(i, j), Bracket::Defined(_))
    }

    pub fn bracket_vec(&self, i: usize, j: usize) -> Option<Vector> {
        match self.bracket(i, j) {
            Bracket::Defined(p) => {
                let mut v = zero_vec(self.dim());
                for (k, c) in p {
                    v[*k] = c.clone();
                }
                Some(v)
            }
            Bracket::OutOfWindow => None,
        }
    }

    /// `[u, v]`, or `None` if a needed basis bracket is out of the window.
    pub fn product(&self, u: &[Scalar], v: &[Scalar]) -> Option<Vector> {
        let mut out = zero_vec(self.dim());
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                match self.bracket(i, j) {
                    Bracket::Defined(p) => {
                        let ab = a * b;
                        for (k, c) in p {
                            out[*k] += &ab * c;
                        }
                    }
                    Bracket::OutOfWindow => return None,
                }
            }
        }
        Some(out)
    }

    pub fn out_of_window_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.is_defined(i, j))
            .collect()
    }

    /// Basis indices with `|degree| ≤ bound`, plus `d` and `z`.
    pub fn indices_within(&self, bound: i64) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| {
                self.labels[i].kind != BasisKind::Loop || self.labels[i].degree.abs() <= bound
            })
            .collect()
    }

    /// First basis triple whose three double brackets are all defined and whose
    /// Jacobi sum is nonzero.
    pub fn jacobi_witness(&self) -> Option<(Vec<usize>, Vector)> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let term = |a: usize, b: usize, c: usize| {
                        self.bracket_vec(a, b)
                            .and_then(|ab| self.product(&ab, &self.unit(c)))
                    };
                    let (Some(x), Some(y), Some(z)) = (term(i, j, k), term(j, k, i), term(k, i, j))
                    else {
                        continue;
                    };
                    let s: Vector = x
                        .iter()
                        .zip(&y)
                        .zip(&z)
                        .map(|((a, b), c)| a + b + c)
                        .collect();
                    if !is_zero_vec(&s) {
                        return Some((vec![i, j, k], s));
                    }
                }
            }
        }
        None
    }

    /// The JSON algebra format with `"partial": true` and the undefined pairs.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.dim();
        let mut table = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if let Bracket::Defined(p) = self.bracket(i, j) {
                    if !p.is_empty() {
                        let p: Vec<(usize, String)> =
                            p.iter().map(|(k, c)| (*k, format_scalar(c))).collect();
                        table.push(serde_json::json!([i, j, p]));
                    }
                }
            }
        }
        let out: Vec<[usize; 2]> = self
            .out_of_window_pairs()
            .into_iter()
            .map(|(i, j)| [i, j])
            .collect();
        serde_json::json!({
            "name": self.name,
            "dim": n,
            "basis": self.basis_names,
            "flavor": "lie",
            "grading": self.labels.iter().map(|l| l.degree).collect::<Vec<_>>(),
            "labels": self.labels,
            "window": self.window,
            "partial": true,
            "table": table,
            "out_of_window": out,
        })
    }
}

/// Window `|i| ≤ n_window` of the affine algebra built on `g` with loop cocycle
/// `ξ(x⊗tⁱ, y⊗tʲ) = i·δ_{i+j,0}·⟨x,y⟩`. With `twist = Some(parts)`, degree `i`
/// carries only `g_{i mod n}` where `n = parts.len()`.
pub fn km_window(
    g: &AlgebraSpec,
    form: &BilinearForm,
    n_window: i64,
    twist: Option<&[Subspace]>,
) -> Result<PartialAlgebra> {
    g.require_lie()?;
    if n_window < 2 {
        return Err(Error::WindowTooSmall(n_window));
    }
    let gd = g.dim();
    form.require_symmetric_invariant(g)?;
    let parts: Vec<Subspace> = match twist {
        Some(p) => {
            check_cyclic_grading(g, p)?;
            p.to_vec()
        }
        None => vec![Subspace::full(gd)],
    };
    let modulus = parts.len() as i64;
    let comp = |deg: i64| &parts[deg.rem_euclid(modulus) as usize];

    let mut names = Vec::new();
    let mut labels = Vec::new();
    let mut elements = Vec::new();
    let mut offset = std::collections::BTreeMap::new();
    for deg in -n_window..=n_window {
        offset.insert(deg, labels.len());
        for (k, v) in comp(deg).basis_vectors().into_iter().enumerate() {
            names.push(format!("{}⊗{}", describe(g, &v), signed_power_name(deg)));
            labels.push(WindowLabel {
                kind: BasisKind::Loop,
                lie_index: Some(k),
                degree: deg,
            });
            elements.push(Some(v));
        }
    }
    let nloop = labels.len();
    names.push("d".into());
    labels.push(WindowLabel {
        kind: BasisKind::Euler,
        lie_index: None,
        degree: 0,
    });
    elements.push(None);
    names.push("z".into());
    labels.push(WindowLabel {
        kind: BasisKind::Central,
        lie_index: None,
        degree: 0,
    });
    elements.push(None);
    let (d_idx, z_idx) = (nloop, nloop + 1);
    let n = labels.len();

    let mut table = vec![Bracket::Defined(Vec::new()); n * n];
    for a in 0..nloop {
        let (da, u) = (labels[a].degree, elements[a].as_ref().expect("loop"));
        // [d, x⊗tⁱ] = i x⊗tⁱ
        if da != 0 {
            table[d_idx * n + a] = Bracket::Defined(vec![(a, int(da))]);
            table[a * n + d_idx] = Bracket::Defined(vec![(a, int(-da))]);
        }
        for b in 0..nloop {
            let (db, v) = (labels[b].degree, elements[b].as_ref().expect("loop"));
            let deg = da + db;
            if deg.abs() > n_window {
                table[a * n + b] = Bracket::OutOfWindow;
                continue;
            }
            let w = g.mul(u, v);
            let coords = comp(deg)
                .coordinates(&w)?
                .expect("grading compatibility checked");
            let base = offset[&deg];
            let mut prod: Vec<(usize, Scalar)> = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (base + k, c))
                .collect();
            if deg == 0 && da != 0 {
                let c = int(da) * form.eval(u, v);
                if !c.is_zero() {
                    prod.push((z_idx, c));
                }
            }
            table[a * n + b] = Bracket::Defined(prod);
        }
    }
    let twist_tag = if modulus > 1 {
        format!("[{modulus}]")
    } else {
        String::new()
    };
    Ok(PartialAlgebra {
        name: format!("{}{twist_tag}^(N={n_window})", g.name()),
        basis_names: names,
        labels,
        elements,
        table,
        window: n_window,
    })
}
