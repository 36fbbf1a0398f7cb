//! Finite permutations in one-line form.
//!
//! A [`Permutation`] of degree `n` is a bijection of `{1..n}`. All public
//! positions and images are 1-based; storage is 0-based. Composition is
//! right-to-left application: `a.compose(&b)` maps `t` to `a(b(t))`.
//!
//! The block constructions used throughout the crate live here:
//! [`Permutation::block_product`] (`a ⊗ b`), [`Permutation::expand_blocks`]
//! (the block expansion `<a>_{k_1..k_m}`) and [`gamma`].

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 1-based one-line images.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &v in images {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation(format!(
                    "image {v} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::NotAPermutation(format!("image {v} repeated")));
            }
            zero_based.push(v - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Builds a permutation from 0-based images, validating bijectivity.
    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_zero_based_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_zero_based(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Image of the 1-based point `t`.
    pub fn apply(&self, t: usize) -> usize {
        self.images[t - 1] + 1
    }

    /// 1-based one-line images.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn compose(&self, rhs: &Permutation) -> Result<Permutation> {
        if self.degree() != rhs.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: rhs.degree(),
            });
        }
        Ok(Permutation {
            images: rhs.images.iter().map(|&t| self.images[t]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (t, &v) in self.images.iter().enumerate() {
            inv[v] = t;
        }
        Permutation { images: inv }
    }

    pub fn block_product(&self, rhs: &Permutation) -> Permutation {
        let n = self.degree();
        let mut images = self.images.clone();
        images.extend(rhs.images.iter().map(|v| v + n));
        Permutation { images }
    }

    /// Block product of a sequence; the empty sequence gives the empty permutation.
    pub fn block_product_all<'a, I>(perms: I) -> Permutation
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut images = Vec::new();
        for p in perms {
            let n = images.len();
            images.extend(p.images.iter().map(|v| v + n));
        }
        Permutation { images }
    }

    /// `self ⊗ self ⊗ ... ⊗ self` with `times` factors.
    pub fn block_power(&self, times: usize) -> Permutation {
        Permutation::block_product_all(std::iter::repeat_n(self, times))
    }

    /// The block expansion `<self>_{sizes}`: permutes the consecutive blocks of
    /// sizes `sizes[0], sizes[1], ...` the way `self` permutes their indices.
    ///
    /// In one-line form the result lists, for `i = 1..m`, the block with index
    /// `self(i)` in increasing order.
    pub fn expand_blocks(&self, sizes: &[usize]) -> Result<Permutation> {
        if sizes.len() != self.degree() {
            return Err(Error::BlockSizes {
                expected: self.degree(),
                got: sizes.len(),
            });
        }
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut acc = 0;
        for &k in sizes {
            offsets.push(acc);
            acc += k;
        }
        let mut images = Vec::with_capacity(acc);
        for &block in &self.images {
            images.extend(offsets[block]..offsets[block] + sizes[block]);
        }
        Ok(Permutation { images })
    }

    /// Splits `self` into factors `s_1 ⊗ ... ⊗ s_r` with `s_j` of degree
    /// `sizes[j]`. Returns `None` when `self` does not preserve the blocks.
    pub fn split_blocks(&self, sizes: &[usize]) -> Option<Vec<Permutation>> {
        if sizes.iter().sum::<usize>() != self.degree() {
            return None;
        }
        let mut out = Vec::with_capacity(sizes.len());
        let mut offset = 0;
        for &k in sizes {
            let slice = &self.images[offset..offset + k];
            let mut local = Vec::with_capacity(k);
            for &v in slice {
                if v < offset || v >= offset + k {
                    return None;
                }
                local.push(v - offset);
            }
            out.push(Permutation::from_zero_based(local).ok()?);
            offset += k;
        }
        Some(out)
    }

    /// Disjoint cycles of length at least two, each starting at its least
    /// element, ordered by that element. 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut t = start;
            while !seen[t] {
                seen[t] = true;
                cycle.push(t + 1);
                t = self.images[t];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Adjacent transpositions `(i i+1)` (1-based `i`) whose left-to-right
    /// product is `self`: `self = s_{i_1} ∘ s_{i_2} ∘ ... ∘ s_{i_r}`.
    pub fn adjacent_transpositions(&self) -> Vec<usize> {
        // Bubble sort `self` to the identity by right multiplication:
        // self ∘ s_{j_1} ∘ ... ∘ s_{j_r} = Id, hence self = s_{j_r} ∘ ... ∘ s_{j_1}.
        let mut work = self.images.clone();
        let mut swaps = Vec::new();
        let n = work.len();
        for pass in 0..n {
            for j in 0..n.saturating_sub(1 + pass) {
                if work[j] > work[j + 1] {
                    work.swap(j, j + 1);
                    swaps.push(j + 1);
                }
            }
        }
        swaps.reverse();
        swaps
    }

    /// The transposition `(i i+1)` in `Σ_n`, 1-based `i`.
    pub fn adjacent(n: usize, i: usize) -> Permutation {
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, i);
        p
    }
}

/// `γ_(m,p)` in `Σ_{mp}`: `γ(l·m + r) = (r-1)·p + (l+1)` for `0 <= l < p`,
/// `1 <= r <= m`. Either argument zero gives the empty permutation.
pub fn gamma(m: usize, p: usize) -> Permutation {
    let mut images = vec![0; m * p];
    for l in 0..p {
        for r in 1..=m {
            images[l * m + r - 1] = (r - 1) * p + l;
        }
    }
    Permutation { images }
}

/// Parses cycle notation such as `(143)(56)` or `(1 4 3)(5 6)` for a
/// permutation of the given degree. `()` and the empty string are the identity.
///
/// Inside a cycle, symbols separated by whitespace or commas are read as
/// decimal numbers; a cycle with no separators is read digit by digit.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let bad = |msg: String| Error::InvalidCycles(msg);
    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(bad(format!("expected '(' in {text:?}")));
        };
        let Some(close) = body.find(')') else {
            return Err(bad(format!("unclosed cycle in {text:?}")));
        };
        let symbols = cycle_symbols(&body[..close]).map_err(bad)?;
        for &s in &symbols {
            if s == 0 || s > degree {
                return Err(bad(format!("symbol {s} outside 1..={degree}")));
            }
            if std::mem::replace(&mut used[s - 1], true) {
                return Err(bad(format!("symbol {s} repeated")));
            }
        }
        for (i, &s) in symbols.iter().enumerate() {
            let next = symbols[(i + 1) % symbols.len()];
            images[s - 1] = next - 1;
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(Permutation { images })
}

pub(crate) fn cycle_symbols(body: &str) -> std::result::Result<Vec<usize>, String> {
    let body = body.trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let separated = body.contains(|c: char| c.is_whitespace() || c == ',');
    let parse = |tok: &str| {
        tok.parse::<usize>()
            .map_err(|_| format!("bad cycle symbol {tok:?}"))
    };
    if separated {
        body.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(parse)
            .collect()
    } else {
        body.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| format!("bad cycle symbol {c:?}"))
            })
            .collect()
    }
}

/// Formats `perm` in cycle notation, omitting fixed points. Degrees up to 9
/// use juxtaposed digits (`(143)(56)`), larger degrees separate symbols by
/// spaces.
pub fn format_cycles(perm: &Permutation) -> String {
    let cycles = perm.cycles();
    if cycles.is_empty() {
        return "()".to_string();
    }
    let sep = if perm.degree() <= 9 { "" } else { " " };
    cycles
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|s| s.to_string()).collect();
            format!("({})", inner.join(sep))
        })
        .collect()
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cycles(self))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_one_line(&images).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_one_line(images).unwrap()
    }

    fn cyc(text: &str, n: usize) -> Permutation {
        parse_cycles(text, n).unwrap()
    }

    #[test]
    fn compose_identity() {
        let a = p(&[4, 2, 1, 3, 5]);
        assert_eq!(Permutation::identity(5).compose(&a).unwrap(), a);
    }

    #[test]
    fn compose_ordered_fibre_example() {
        let sigma = cyc("(143)", 5);
        let expanded = p(&[5, 3, 4, 1, 2]);
        assert_eq!(sigma.compose(&expanded).unwrap(), p(&[5, 1, 3, 4, 2]));
    }

    #[test]
    fn compose_degree_mismatch() {
        let err = Permutation::identity(2)
            .compose(&Permutation::identity(3))
            .unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Permutation::identity(4).inverse(), Permutation::identity(4));
        assert_eq!(
            p(&[1, 2, 5, 3, 6, 4, 7]).inverse(),
            p(&[1, 2, 4, 6, 3, 5, 7])
        );
    }

    #[test]
    fn block_product_examples() {
        let id2 = Permutation::identity(2);
        assert_eq!(id2.block_product(&id2), Permutation::identity(4));
        let t = cyc("(12)", 2);
        assert_eq!(
            cyc("(132)", 3).block_product(&t.block_product(&t)),
            p(&[3, 1, 2, 5, 4, 7, 6])
        );
        assert_eq!(
            cyc("(4321)", 4).block_product(&cyc("(13)", 3)),
            p(&[4, 1, 2, 3, 7, 6, 5])
        );
        let empty = Permutation::identity(0);
        assert_eq!(empty.block_product(&t), t);
        assert_eq!(t.block_product(&empty), t);
    }

    #[test]
    fn expand_blocks_examples() {
        let alpha = cyc("(1423)", 4);
        assert_eq!(
            alpha.expand_blocks(&[2, 0, 2, 1]).unwrap(),
            p(&[5, 3, 4, 1, 2])
        );
        assert_eq!(alpha.expand_blocks(&[1, 1, 1, 1]).unwrap(), alpha);
        assert_eq!(
            Permutation::identity(3).expand_blocks(&[2, 0, 3]).unwrap(),
            Permutation::identity(5)
        );
        assert!(matches!(
            alpha.expand_blocks(&[1, 2]),
            Err(Error::BlockSizes { expected: 4, got: 2 })
        ));
    }

    #[test]
    fn gamma_examples() {
        for m in 1..5 {
            assert_eq!(gamma(m, 1), Permutation::identity(m));
            assert_eq!(gamma(1, m), Permutation::identity(m));
        }
        assert_eq!(gamma(2, 2), p(&[1, 3, 2, 4]));
        assert_eq!(gamma(0, 3).degree(), 0);
        assert_eq!(gamma(3, 0).degree(), 0);
    }

    #[test]
    fn cycle_parsing() {
        assert_eq!(cyc("()", 3), Permutation::identity(3));
        assert_eq!(cyc("", 2), Permutation::identity(2));
        assert_eq!(cyc("(165732)", 7), p(&[6, 1, 2, 4, 7, 5, 3]));
        assert_eq!(cyc("(143)(56)", 6), p(&[4, 2, 1, 3, 6, 5]));
        assert_eq!(cyc("(1 4 3) (5 6)", 6), p(&[4, 2, 1, 3, 6, 5]));
        assert_eq!(cyc("(1 10)", 10).apply(10), 1);
    }

    #[test]
    fn cycle_parse_errors() {
        assert!(parse_cycles("(121)", 3).is_err());
        assert!(parse_cycles("(12)(23)", 3).is_err());
        assert!(parse_cycles("(14)", 3).is_err());
        assert!(parse_cycles("(12", 3).is_err());
        assert!(parse_cycles("12", 3).is_err());
        assert!(parse_cycles("(1a)", 3).is_err());
    }

    #[test]
    fn cycle_formatting() {
        assert_eq!(format_cycles(&p(&[4, 1, 2, 5, 3])), "(14532)");
        assert_eq!(format_cycles(&Permutation::identity(4)), "()");
        assert_eq!(format_cycles(&p(&[5, 1, 2, 6, 3, 7, 4])), "(1532)(467)");
        let big = Permutation::adjacent(10, 9);
        assert_eq!(format_cycles(&big), "(9 10)");
    }

    #[test]
    fn split_blocks_detects_non_block_permutations() {
        let a = cyc("(143)", 4).block_product(&cyc("(12)", 2));
        assert_eq!(
            a.split_blocks(&[4, 2]).unwrap(),
            vec![cyc("(143)", 4), cyc("(12)", 2)]
        );
        assert!(p(&[6, 3, 1, 4, 5, 2]).split_blocks(&[4, 2]).is_none());
        assert!(a.split_blocks(&[2, 4]).is_none());
    }

    #[test]
    fn adjacent_decomposition_reassembles() {
        let a = p(&[3, 1, 4, 5, 2]);
        let mut acc = Permutation::identity(5);
        for i in a.adjacent_transpositions() {
            acc = acc.compose(&Permutation::adjacent(5, i)).unwrap();
        }
        assert_eq!(acc, a);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_line(&[1, 1]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[3, 1]).is_err());
        assert!(serde_json::from_str::<Permutation>("[2,2]").is_err());
        let ok: Permutation = serde_json::from_str("[2,1,3]").unwrap();
        assert_eq!(serde_json::to_string(&ok).unwrap(), "[2,1,3]");
    }
}
