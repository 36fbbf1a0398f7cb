//! Finite-set maps decorated with permutations, and the equivalent
//! description by totally ordered fibres.
//!
//! An [`FSetHatArrow`] `([n] -> [m], σ)` carries `σ ∈ Σ_n`; reading `σ` on the
//! `i`-th consecutive block of size `|f^{-1}(i)|` lists the fibre over `i` in
//! its chosen order. [`OrderedFibreArrow`] stores those fibre sequences
//! directly and composes by concatenating fibres, which makes it an
//! independent check of [`compose_hat`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinMap {
    target: usize,
    // 0-based values
    values: Vec<usize>,
}

impl FinMap {
    /// Builds `[n] -> [target]` from 1-based values.
    pub fn new(target: usize, values: &[usize]) -> Result<Self> {
        let mut zero_based = Vec::with_capacity(values.len());
        for &v in values {
            if v == 0 || v > target {
                return Err(Error::InvalidMap(format!(
                    "value {v} outside 1..={target}"
                )));
            }
            zero_based.push(v - 1);
        }
        Ok(FinMap {
            target,
            values: zero_based,
        })
    }

    pub fn identity(n: usize) -> Self {
        FinMap {
            target: n,
            values: (0..n).collect(),
        }
    }

    pub fn source(&self) -> usize {
        self.values.len()
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// 1-based values.
    pub fn values(&self) -> Vec<usize> {
        self.values.iter().map(|v| v + 1).collect()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.values[i - 1] + 1
    }

    /// `|f^{-1}(i)|` for each `i`.
    pub fn fibre_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.target];
        for &v in &self.values {
            sizes[v] += 1;
        }
        sizes
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &FinMap) -> Result<FinMap> {
        if inner.target != self.source() {
            return Err(Error::RankMismatch {
                expected: self.source(),
                got: inner.target,
            });
        }
        Ok(FinMap {
            target: self.target,
            values: inner.values.iter().map(|&v| self.values[v]).collect(),
        })
    }

    /// Disjoint union with targets of `rhs` shifted past `self`.
    pub fn coproduct(&self, rhs: &FinMap) -> FinMap {
        let mut values = self.values.clone();
        values.extend(rhs.values.iter().map(|v| v + self.target));
        FinMap {
            target: self.target + rhs.target,
            values,
        }
    }
}

/// A map of finite sets together with `σ ∈ Σ_n` ordering its fibres.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FSetHatArrow {
    map: FinMap,
    sigma: Permutation,
}

impl FSetHatArrow {
    pub fn new(map: FinMap, sigma: Permutation) -> Result<Self> {
        if sigma.degree() != map.source() {
            return Err(Error::DegreeMismatch {
                left: sigma.degree(),
                right: map.source(),
            });
        }
        Ok(FSetHatArrow { map, sigma })
    }

    pub fn identity(n: usize) -> Self {
        FSetHatArrow {
            map: FinMap::identity(n),
            sigma: Permutation::identity(n),
        }
    }

    pub fn map(&self) -> &FinMap {
        &self.map
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn source(&self) -> usize {
        self.map.source()
    }

    pub fn target(&self) -> usize {
        self.map.target()
    }

    /// Normal form in the algebra PROP: `self = μ^{[q]} ∘ P_σ` with `q_i = |f^{-1}(i)|`.
    pub fn a_normal_form(&self) -> (Vec<usize>, Permutation) {
        (self.map.fibre_sizes(), self.sigma.clone())
    }

    /// Fibres in their chosen order: the fibre over `i` is `σ` applied to the
    /// `i`-th consecutive block. Returns `None` if `σ` does not send each
    /// block into the right fibre.
    fn fibres(&self) -> Option<Vec<Vec<usize>>> {
        let mut out = Vec::with_capacity(self.target());
        let mut start = 0;
        let images = self.sigma.zero_based();
        for (i, size) in self.map.fibre_sizes().into_iter().enumerate() {
            let fibre: Vec<usize> = images[start..start + size].iter().map(|v| v + 1).collect();
            if fibre.iter().any(|&x| self.map.apply(x) != i + 1) {
                return None;
            }
            out.push(fibre);
            start += size;
        }
        Some(out)
    }
}

/// `(g, τ) ∘ (f, σ) = (g ∘ f, σ ∘ ⟨τ⟩_{k})` with `k_i = |f^{-1}(i)|`.
pub fn compose_hat(g: &FSetHatArrow, f: &FSetHatArrow) -> Result<FSetHatArrow> {
    let map = g.map.compose(&f.map)?;
    let expanded = g.sigma.expand_blocks(&f.map.fibre_sizes())?;
    let sigma = f.sigma.compose(&expanded)?;
    Ok(FSetHatArrow { map, sigma })
}

pub fn tensor_hat(a1: &FSetHatArrow, a2: &FSetHatArrow) -> FSetHatArrow {
    FSetHatArrow {
        map: a1.map.coproduct(&a2.map),
        sigma: a1.sigma.block_product(&a2.sigma),
    }
}

/// A map of finite sets with a chosen total order on every fibre.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct OrderedFibreArrow {
    // 1-based fibre sequences, one per target point
    fibres: Vec<Vec<usize>>,
}

impl OrderedFibreArrow {
    /// Validates that the sequences partition `{1..n}`.
    pub fn new(fibres: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = fibres.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for &x in fibres.iter().flatten() {
            if x == 0 || x > n {
                return Err(Error::InvalidPartition(format!(
                    "fibre element {x} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPartition(format!(
                    "fibre element {x} appears twice"
                )));
            }
        }
        Ok(OrderedFibreArrow { fibres })
    }

    pub fn identity(n: usize) -> Self {
        OrderedFibreArrow {
            fibres: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    pub fn fibres(&self) -> &[Vec<usize>] {
        &self.fibres
    }

    pub fn source(&self) -> usize {
        self.fibres.iter().map(Vec::len).sum()
    }

    pub fn target(&self) -> usize {
        self.fibres.len()
    }

    pub fn map(&self) -> FinMap {
        let mut values = vec![0; self.source()];
        for (i, fibre) in self.fibres.iter().enumerate() {
            for &x in fibre {
                values[x - 1] = i;
            }
        }
        FinMap {
            target: self.target(),
            values,
        }
    }
}

impl TryFrom<Vec<Vec<usize>>> for OrderedFibreArrow {
    type Error = Error;

    fn try_from(fibres: Vec<Vec<usize>>) -> Result<Self> {
        OrderedFibreArrow::new(fibres)
    }
}

impl From<OrderedFibreArrow> for Vec<Vec<usize>> {
    fn from(o: OrderedFibreArrow) -> Self {
        o.fibres
    }
}

pub fn to_ordered(a: &FSetHatArrow) -> Result<OrderedFibreArrow> {
    let fibres = a.fibres().ok_or_else(|| {
        Error::Invariant(format!(
            "σ = {} does not list the fibres of {:?}",
            a.sigma,
            a.map.values()
        ))
    })?;
    Ok(OrderedFibreArrow { fibres })
}

/// The permutation is the concatenation of the fibre sequences.
pub fn from_ordered(o: &OrderedFibreArrow) -> Result<FSetHatArrow> {
    let images: Vec<usize> = o.fibres.iter().flatten().copied().collect();
    let sigma = Permutation::from_one_line(&images)?;
    FSetHatArrow::new(o.map(), sigma)
}

/// The fibre over `i` is the concatenation of the `f`-fibres over `g`'s fibre of `i`.
pub fn compose_ordered(g: &OrderedFibreArrow, f: &OrderedFibreArrow) -> Result<OrderedFibreArrow> {
    if g.source() != f.target() {
        return Err(Error::RankMismatch {
            expected: g.source(),
            got: f.target(),
        });
    }
    let fibres = g
        .fibres
        .iter()
        .map(|gfib| {
            gfib.iter()
                .flat_map(|&j| f.fibres[j - 1].iter().copied())
                .collect()
        })
        .collect();
    Ok(OrderedFibreArrow { fibres })
}

#[derive(Serialize, Deserialize)]
struct FSetHatJson {
    target: usize,
    map: Vec<usize>,
    sigma: Permutation,
}

impl Serialize for FSetHatArrow {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FSetHatJson {
            target: self.target(),
            map: self.map.values(),
            sigma: self.sigma.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FSetHatArrow {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = FSetHatJson::deserialize(d)?;
        let map = FinMap::new(raw.target, &raw.map).map_err(serde::de::Error::custom)?;
        FSetHatArrow::new(map, raw.sigma).map_err(serde::de::Error::custom)
    }
}
