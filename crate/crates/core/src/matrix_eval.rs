//! Exact linear-algebra semantics of terms over a concrete bialgebra.
//!
//! A term `n -> m` becomes a `d^m × d^n` matrix over the rationals, where `d`
//! is the dimension of the bialgebra. Tensor products of basis vectors are
//! indexed with the first factor most significant, and `P_σ` sends
//! `e_{i_1} ⊗ ⋯ ⊗ e_{i_n}` to `e_{i_{σ(1)}} ⊗ ⋯ ⊗ e_{i_{σ(n)}}`.
//!
//! Matrices are stored column by column, keeping only non-zero entries.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fgfmon::NormalForm;
use crate::terms::{Term, AXIOMS};

pub type Scalar = BigRational;

/// Default bound on `d^k` for every wire count `k` met during evaluation.
pub const DEFAULT_DIM_BOUND: u128 = 4096;

fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: Vec<BTreeMap<usize, Scalar>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols: vec![BTreeMap::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.cols[i].insert(i, Scalar::one());
        }
        m
    }

    /// Builds a matrix from row-major entries.
    pub fn from_rows(rows: &[Vec<Scalar>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(rows.len(), ncols);
        for (r, row) in rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.cols[c].get(&r).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        if v.is_zero() {
            self.cols[c].remove(&r);
        } else {
            self.cols[c].insert(r, v);
        }
    }

    fn add_at(&mut self, r: usize, c: usize, v: Scalar) {
        let entry = self.cols[c].entry(r).or_insert_with(Scalar::zero);
        *entry += v;
        if entry.is_zero() {
            self.cols[c].remove(&r);
        }
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols() != rhs.rows {
            return Err(Error::DegreeMismatch {
                left: self.cols(),
                right: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols());
        for (j, col) in rhs.cols.iter().enumerate() {
            for (k, b) in col {
                for (i, a) in &self.cols[*k] {
                    out.add_at(*i, j, a * b);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product with `self` as the more significant factor.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * rhs.rows, self.cols() * rhs.cols());
        for (ja, ca) in self.cols.iter().enumerate() {
            for (jb, cb) in rhs.cols.iter().enumerate() {
                let col = &mut out.cols[ja * rhs.cols() + jb];
                for (ia, a) in ca {
                    for (ib, b) in cb {
                        col.insert(ia * rhs.rows + ib, a * b);
                    }
                }
            }
        }
        out
    }

    /// First `(row, col)` where the matrices differ.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols() != other.cols() {
            return Some((self.rows.min(other.rows), self.cols().min(other.cols())));
        }
        for c in 0..self.cols() {
            if self.cols[c] != other.cols[c] {
                let rows = self.cols[c].keys().chain(other.cols[c].keys());
                let r = rows
                    .copied()
                    .filter(|&r| self.get(r, c) != other.get(r, c))
                    .min()
                    .expect("columns differ");
                return Some((r, c));
            }
        }
        None
    }

    /// Rows of `"num/den"` strings.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.rows)
            .map(|r| {
                (0..self.cols())
                    .map(|c| {
                        let v = self.get(r, c);
                        serde_json::Value::String(format!("{}/{}", v.numer(), v.denom()))
                    })
                    .collect()
            })
            .collect();
        serde_json::Value::Array(rows)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Matrix> {
        let bad = |msg: &str| Error::Json(msg.to_string());
        let rows = value.as_array().ok_or_else(|| bad("matrix must be an array of rows"))?;
        let mut parsed = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row.as_array().ok_or_else(|| bad("row must be an array"))?;
            let mut entries = Vec::with_capacity(row.len());
            for e in row {
                let s = e.as_str().ok_or_else(|| bad("entry must be a \"num/den\" string"))?;
                let v: Scalar = s.parse().map_err(|_| bad(&format!("bad rational {s:?}")))?;
                entries.push(v);
            }
            parsed.push(entries);
        }
        if parsed.iter().any(|r| r.len() != parsed[0].len()) {
            return Err(bad("ragged rows"));
        }
        Ok(Matrix::from_rows(&parsed))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}:\n{self}", self.rows, self.cols())
    }
}

/// Aligned grid of exact entries.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| (0..self.cols()).map(|c| self.get(r, c).to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Structure constants of a finite-dimensional bialgebra in a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BialgebraTable {
    pub dim: usize,
    /// `mu[a][b]` is the coordinate vector of `e_a e_b`.
    pub mu: Vec<Vec<Vec<Scalar>>>,
    pub eta: Vec<Scalar>,
    /// `delta[a]` has `d^2` coordinates, index `b·d + c` for `e_b ⊗ e_c`.
    pub delta: Vec<Vec<Scalar>>,
    pub eps: Vec<Scalar>,
}

impl BialgebraTable {
    /// The ground field as a one-dimensional bialgebra.
    pub fn trivial() -> Self {
        BialgebraTable {
            dim: 1,
            mu: vec![vec![vec![int(1)]]],
            eta: vec![int(1)],
            delta: vec![vec![int(1)]],
            eps: vec![int(1)],
        }
    }

    /// Sweedler's four-dimensional bialgebra with basis `1, g, x, gx`:
    /// `g² = 1`, `x² = 0`, `xg = -gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`,
    /// `ε(g) = 1`, `ε(x) = 0`.
    pub fn sweedler_h4() -> Self {
        Self::h4_with_delta(|b| match b {
            (0, 0) => vec![((0, 0), 1)],
            (1, 0) => vec![((1, 1), 1)],
            // Δx = x⊗1 + g⊗x
            (0, 1) => vec![((2, 0), 1), ((1, 2), 1)],
            // Δ(gx) = gx⊗g + 1⊗gx
            _ => vec![((3, 1), 1), ((0, 3), 1)],
        })
    }

    /// The algebra of [`sweedler_h4`](Self::sweedler_h4) with `x` made
    /// primitive, `Δx = x⊗1 + 1⊗x`. Multiplicativity of `Δ` fails.
    pub fn broken_h4() -> Self {
        Self::h4_with_delta(|b| match b {
            (0, 0) => vec![((0, 0), 1)],
            (1, 0) => vec![((1, 1), 1)],
            (0, 1) => vec![((2, 0), 1), ((0, 2), 1)],
            _ => vec![((3, 1), 1), ((1, 3), 1)],
        })
    }

    /// Basis element `g^a x^b` has index `a + 2b`.
    fn h4_with_delta(delta_of: impl Fn((usize, usize)) -> Vec<((usize, usize), i64)>) -> Self {
        let d = 4;
        let split = |i: usize| (i % 2, i / 2);
        let mut mu = vec![vec![vec![int(0); d]; d]; d];
        for (i, row) in mu.iter_mut().enumerate() {
            for (j, out) in row.iter_mut().enumerate() {
                let (a, b) = split(i);
                let (c, e) = split(j);
                if b + e < 2 {
                    // x g^c = (-1)^c g^c x
                    let sign = if b * c % 2 == 1 { -1 } else { 1 };
                    out[(a + c) % 2 + 2 * (b + e)] = int(sign);
                }
            }
        }
        let mut eta = vec![int(0); d];
        eta[0] = int(1);
        let delta = (0..d)
            .map(|i| {
                let mut v = vec![int(0); d * d];
                for ((l, r), c) in delta_of(split(i)) {
                    v[l * d + r] += int(c);
                }
                v
            })
            .collect();
        let eps = vec![int(1), int(1), int(0), int(0)];
        BialgebraTable {
            dim: d,
            mu,
            eta,
            delta,
            eps,
        }
    }

    fn mu_matrix(&self) -> Matrix {
        let d = self.dim;
        let mut m = Matrix::zeros(d, d * d);
        for a in 0..d {
            for b in 0..d {
                for (r, v) in self.mu[a][b].iter().enumerate() {
                    m.set(r, a * d + b, v.clone());
                }
            }
        }
        m
    }

    fn eta_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim, 1);
        for (r, v) in self.eta.iter().enumerate() {
            m.set(r, 0, v.clone());
        }
        m
    }

    fn delta_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim * self.dim, self.dim);
        for (a, col) in self.delta.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                m.set(r, a, v.clone());
            }
        }
        m
    }

    fn eps_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(1, self.dim);
        for (c, v) in self.eps.iter().enumerate() {
            m.set(0, c, v.clone());
        }
        m
    }

    fn power(&self, k: usize) -> u128 {
        (0..k).fold(1u128, |acc, _| acc.saturating_mul(self.dim as u128))
    }
}

/// Matrix of `P_σ` on `d^n` with output factor `t` taken from input factor `σ(t)`.
pub fn perm_matrix(sigma: &crate::perm::Permutation, d: usize) -> Matrix {
    let n = sigma.degree();
    let size = d.pow(n as u32);
    let mut m = Matrix::zeros(size, size);
    let mut digits = vec![0; n];
    for col in 0..size {
        decode(col, d, &mut digits);
        let row = sigma
            .zero_based()
            .iter()
            .fold(0, |acc, &s| acc * d + digits[s]);
        m.set(row, col, Scalar::one());
    }
    m
}

fn decode(mut index: usize, d: usize, digits: &mut [usize]) {
    for slot in digits.iter_mut().rev() {
        *slot = index % d;
        index /= d;
    }
}

fn guard(b: &BialgebraTable, wires: usize, bound: u128) -> Result<()> {
    let dim = b.power(wires);
    if dim > bound {
        return Err(Error::DimensionBound { dim, bound });
    }
    Ok(())
}

fn check_dims(t: &Term, b: &BialgebraTable, bound: u128) -> Result<()> {
    let (n, m) = t.arity()?;
    guard(b, n.max(m), bound)?;
    if let Term::Compose(x, y) | Term::Tensor(x, y) = t {
        check_dims(x, b, bound)?;
        check_dims(y, b, bound)?;
    }
    Ok(())
}

pub fn term_to_matrix(t: &Term, b: &BialgebraTable, bound: u128) -> Result<Matrix> {
    check_dims(t, b, bound)?;
    Ok(eval(t, b))
}

fn eval(t: &Term, b: &BialgebraTable) -> Matrix {
    match t {
        Term::Mu => b.mu_matrix(),
        Term::Eta => b.eta_matrix(),
        Term::Delta => b.delta_matrix(),
        Term::Eps => b.eps_matrix(),
        Term::Id => Matrix::identity(b.dim),
        Term::Swap => perm_matrix(&crate::perm::Permutation::adjacent(2, 1), b.dim),
        Term::Perm(s) => perm_matrix(s, b.dim),
        Term::Compose(outer, inner) => eval(outer, b)
            .mul(&eval(inner, b))
            .expect("arity checked"),
        Term::Tensor(l, r) => eval(l, b).kron(&eval(r, b)),
    }
}

/// Sparse vector in a tensor power, keyed by basis multi-index.
type Tensor = HashMap<Vec<usize>, Scalar>;

fn iter_delta_of(b: &BialgebraTable, basis: usize, k: usize) -> Tensor {
    let mut out = Tensor::new();
    if k == 0 {
        if !b.eps[basis].is_zero() {
            out.insert(Vec::new(), b.eps[basis].clone());
        }
        return out;
    }
    out.insert(vec![basis], Scalar::one());
    // Δ^{[k]} = (Δ^{[k-1]} ⊗ Id) ∘ Δ: each step splits the first factor.
    for _ in 1..k {
        let mut next = Tensor::new();
        for (idx, c) in out {
            for (pair, v) in b.delta[idx[0]].iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let mut key = vec![pair / b.dim, pair % b.dim];
                key.extend_from_slice(&idx[1..]);
                *next.entry(key).or_insert_with(Scalar::zero) += &c * v;
            }
        }
        next.retain(|_, v| !v.is_zero());
        out = next;
    }
    out
}

fn iter_mu_of(b: &BialgebraTable, factors: &[usize]) -> Vec<Scalar> {
    let d = b.dim;
    let Some((&first, rest)) = factors.split_first() else {
        return b.eta.clone();
    };
    let mut acc = vec![Scalar::zero(); d];
    acc[first] = Scalar::one();
    // μ^{[k]} = μ ∘ (μ^{[k-1]} ⊗ Id): multiply on the right one factor at a time.
    for &f in rest {
        let mut next = vec![Scalar::zero(); d];
        for (a, ca) in acc.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (r, v) in b.mu[a][f].iter().enumerate() {
                if !v.is_zero() {
                    next[r] += ca * v;
                }
            }
        }
        acc = next;
    }
    acc
}

/// The matrix of `μ^{[q]} ∘ P_σ ∘ Δ^{[p]}`, built one input basis vector at a time.
pub fn normal_form_to_matrix(nf: &NormalForm, b: &BialgebraTable, bound: u128) -> Result<Matrix> {
    let n = nf.source();
    let m = nf.target();
    guard(b, n.max(m), bound)?;
    let d = b.dim;
    let rows = d.pow(m as u32);
    let cols = d.pow(n as u32);
    let mut out = Matrix::zeros(rows, cols);
    let mut digits = vec![0; n];
    let images = nf.sigma.zero_based();
    for col in 0..cols {
        decode(col, d, &mut digits);
        // ⊗_i Δ^{[p_i]}(e_{digit_i}) as a sparse tensor over the strands
        let mut strands = Tensor::new();
        strands.insert(Vec::new(), Scalar::one());
        for (i, &digit) in digits.iter().enumerate() {
            let piece = iter_delta_of(b, digit, nf.p[i]);
            let mut next = Tensor::new();
            for (k1, c1) in &strands {
                for (k2, c2) in &piece {
                    let mut key = k1.clone();
                    key.extend_from_slice(k2);
                    *next.entry(key).or_insert_with(Scalar::zero) += c1 * c2;
                }
            }
            strands = next;
        }
        for (key, coeff) in strands {
            if coeff.is_zero() {
                continue;
            }
            let permuted: Vec<usize> = images.iter().map(|&s| key[s]).collect();
            // multiply out each output block and expand the tensor product
            let mut partial: Vec<(usize, Scalar)> = vec![(0, coeff)];
            let mut t = 0;
            for &qj in &nf.q {
                let prod = iter_mu_of(b, &permuted[t..t + qj]);
                t += qj;
                let mut next = Vec::new();
                for (row, c) in &partial {
                    for (r, v) in prod.iter().enumerate() {
                        if !v.is_zero() {
                            next.push((row * d + r, c * v));
                        }
                    }
                }
                partial = next;
            }
            for (row, c) in partial {
                out.add_at(row, col, c);
            }
        }
    }
    Ok(out)
}

/// Result of comparing both sides of one axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    /// `(row, col, lhs entry, rhs entry)` at the first mismatch.
    pub first_difference: Option<(usize, usize, Scalar, Scalar)>,
}

pub fn check_axioms(b: &BialgebraTable) -> Vec<AxiomCheck> {
    AXIOMS
        .iter()
        .map(|ax| {
            let side = |text: &str| {
                let t = Term::parse(text).expect("axiom terms parse");
                term_to_matrix(&t, b, u128::MAX).expect("axioms use at most four wires")
            };
            let l = side(ax.lhs);
            let r = side(ax.rhs);
            let first_difference = l.first_difference(&r).map(|(row, col)| {
                let get = |m: &Matrix| {
                    if row < m.rows() && col < m.cols() {
                        m.get(row, col)
                    } else {
                        Scalar::zero()
                    }
                };
                (row, col, get(&l), get(&r))
            });
            AxiomCheck {
                name: ax.name,
                passed: first_difference.is_none(),
                first_difference,
            }
        })
        .collect()
}
