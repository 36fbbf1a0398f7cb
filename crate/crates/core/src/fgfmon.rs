//! Free-monoid homomorphisms decorated with permutations.
//!
//! A [`HatArrow`] `n -> m` is a homomorphism `f: F(x_1..x_n) -> F(y_1..y_m)`
//! together with `σ_i ∈ Σ_{k_i}` for every target letter, where
//! `k_i = π_i(f(x_1⋯x_n))`. The permutation `σ_i` fixes the order in which
//! the `k_i` occurrences of `y_i` are multiplied. Every arrow factors uniquely
//! as `μ^{[q]} ∘ P_σ ∘ Δ^{[p]}`; that factorisation is [`NormalForm`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fset::FSetHatArrow;
use crate::perm::{gamma, Permutation};
use crate::words::{MonoidHom, Word};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HatArrow {
    hom: MonoidHom,
    perms: Vec<Permutation>,
}

/// The triple `(p, σ, q)` standing for `μ^{[q]} ∘ P_σ ∘ Δ^{[p]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "NormalFormJson", into = "NormalFormJson")]
pub struct NormalForm {
    pub p: Vec<usize>,
    pub sigma: Permutation,
    pub q: Vec<usize>,
}

impl NormalForm {
    pub fn new(p: Vec<usize>, sigma: Permutation, q: Vec<usize>) -> Result<Self> {
        let sp: usize = p.iter().sum();
        let sq: usize = q.iter().sum();
        if sp != sigma.degree() || sq != sigma.degree() {
            return Err(Error::InvalidNormalForm(format!(
                "Σp = {sp}, Σq = {sq}, deg σ = {}",
                sigma.degree()
            )));
        }
        Ok(NormalForm { p, sigma, q })
    }

    pub fn identity(n: usize) -> Self {
        NormalForm {
            p: vec![1; n],
            sigma: Permutation::identity(n),
            q: vec![1; n],
        }
    }

    pub fn source(&self) -> usize {
        self.p.len()
    }

    pub fn target(&self) -> usize {
        self.q.len()
    }

    /// Total number of strands `s = Σp = Σq`.
    pub fn strands(&self) -> usize {
        self.sigma.degree()
    }

    /// First component in which `self` and `other` differ.
    pub fn difference(&self, other: &NormalForm) -> Option<&'static str> {
        if self.p.len() != other.p.len() || self.q.len() != other.q.len() {
            Some("arity")
        } else if self.p != other.p {
            Some("p")
        } else if self.q != other.q {
            Some("q")
        } else if self.sigma != other.sigma {
            Some("sigma")
        } else {
            None
        }
    }

    /// Renders the arrow on generic elements, e.g. `x⊗y ↦ x_(1)y_(1) ⊗ x_(2)y_(2)`.
    pub fn sweedler(&self) -> String {
        let n = self.source();
        let names: Vec<String> = if n <= 3 {
            ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=n).map(|i| format!("x{i}")).collect()
        };
        let lhs = if n == 0 {
            "1".to_string()
        } else {
            names.join("⊗")
        };

        // strand s belongs to source `owner[s]` with Sweedler index `index[s]`
        let mut owner = Vec::with_capacity(self.strands());
        let mut index = Vec::with_capacity(self.strands());
        for (i, &pi) in self.p.iter().enumerate() {
            for r in 1..=pi {
                owner.push(i);
                index.push(r);
            }
        }
        let atom = |s: usize| {
            let i = owner[s];
            if self.p[i] > 1 {
                format!("{}_({})", names[i], index[s])
            } else {
                names[i].clone()
            }
        };

        let images = self.sigma.zero_based();
        let mut factors = Vec::with_capacity(self.target());
        let mut t = 0;
        for &qj in &self.q {
            let factor: String = (t..t + qj).map(|pos| atom(images[pos])).collect();
            factors.push(if factor.is_empty() {
                "1".to_string()
            } else {
                factor
            });
            t += qj;
        }
        let counits: String = self
            .p
            .iter()
            .enumerate()
            .filter(|(_, &pi)| pi == 0)
            .map(|(i, _)| format!("ε({})", names[i]))
            .collect();
        let rhs = match (counits.is_empty(), factors.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => factors.join(" ⊗ "),
            (false, true) => counits,
            (false, false) => format!("{counits} {}", factors.join(" ⊗ ")),
        };
        format!("{lhs} ↦ {rhs}")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p={:?} σ={:?} q={:?}",
            self.p,
            self.sigma.one_line(),
            self.q
        )
    }
}

#[derive(Serialize, Deserialize)]
struct NormalFormJson {
    p: Vec<usize>,
    sigma: Permutation,
    q: Vec<usize>,
}

impl TryFrom<NormalFormJson> for NormalForm {
    type Error = Error;

    fn try_from(raw: NormalFormJson) -> Result<Self> {
        NormalForm::new(raw.p, raw.sigma, raw.q)
    }
}

impl From<NormalForm> for NormalFormJson {
    fn from(nf: NormalForm) -> Self {
        NormalFormJson {
            p: nf.p,
            sigma: nf.sigma,
            q: nf.q,
        }
    }
}

fn check_degrees(w: &Word, perms: &[Permutation]) -> Result<()> {
    if perms.len() != w.alphabet_size() {
        return Err(Error::RankMismatch {
            expected: w.alphabet_size(),
            got: perms.len(),
        });
    }
    for (i, (k, s)) in w.letter_counts().into_iter().zip(perms).enumerate() {
        if s.degree() != k {
            return Err(Error::LetterDegree {
                letter: i + 1,
                expected: k,
                got: s.degree(),
            });
        }
    }
    Ok(())
}

/// `Ψ(w, σ⃗) = ξ_w^{-1} ∘ (σ_1 ⊗ ⋯ ⊗ σ_m)`.
pub fn psi(w: &Word, perms: &[Permutation]) -> Result<Permutation> {
    check_degrees(w, perms)?;
    w.xi().inverse().compose(&Permutation::block_product_all(perms))
}

/// Inverse of [`psi`] for words with letter counts `k`.
pub fn psi_inv(k: &[usize], alpha: &Permutation) -> Result<(Word, Vec<Permutation>)> {
    let total: usize = k.iter().sum();
    if total != alpha.degree() {
        return Err(Error::DegreeMismatch {
            left: total,
            right: alpha.degree(),
        });
    }
    let mut block_of = Vec::with_capacity(total);
    for (i, &ki) in k.iter().enumerate() {
        block_of.extend(std::iter::repeat_n(i, ki));
    }
    let inv = alpha.inverse();
    let letters = inv.zero_based().iter().map(|&s| block_of[s]).collect();
    let w = Word::from_zero_based(k.len(), letters);
    let product = w.xi().compose(alpha)?;
    let perms = product.split_blocks(k).ok_or_else(|| {
        Error::Invariant(format!("ξ_w ∘ α is not blocked by {k:?}"))
    })?;
    Ok((w, perms))
}

/// `ρ = ⟨ξ_w⟩^{-1}` with block sizes `p_1^{×k_1}, …, p_m^{×k_m}`, where `k_i = π_i(w)`.
pub fn rho(w: &Word, p: &[usize]) -> Result<Permutation> {
    if p.len() != w.alphabet_size() {
        return Err(Error::RankMismatch {
            expected: w.alphabet_size(),
            got: p.len(),
        });
    }
    let sizes: Vec<usize> = w
        .letter_counts()
        .into_iter()
        .zip(p)
        .flat_map(|(k, &pi)| std::iter::repeat_n(pi, k))
        .collect();
    Ok(w.xi().expand_blocks(&sizes)?.inverse())
}

impl HatArrow {
    pub fn new(hom: MonoidHom, perms: Vec<Permutation>) -> Result<Self> {
        check_degrees(&hom.total_image(), &perms)?;
        Ok(HatArrow { hom, perms })
    }

    pub fn identity(n: usize) -> Self {
        HatArrow {
            hom: MonoidHom::identity(n),
            perms: vec![Permutation::identity(1); n],
        }
    }

    /// A homomorphism with identity decorations.
    pub fn undecorated(hom: MonoidHom) -> Self {
        let perms = hom
            .total_image()
            .letter_counts()
            .into_iter()
            .map(Permutation::identity)
            .collect();
        HatArrow { hom, perms }
    }

    /// `μ: x, y ↦ z`.
    pub fn mu() -> Self {
        Self::undecorated(MonoidHom::from_letters(1, &[vec![1], vec![1]]).unwrap())
    }

    /// `η: F() -> F(x)`.
    pub fn eta() -> Self {
        Self::undecorated(MonoidHom::from_letters(1, &[]).unwrap())
    }

    /// `Δ: x ↦ yz`.
    pub fn delta() -> Self {
        Self::undecorated(MonoidHom::from_letters(2, &[vec![1, 2]]).unwrap())
    }

    /// `ε: x ↦ 1`.
    pub fn eps() -> Self {
        Self::undecorated(MonoidHom::from_letters(0, &[vec![]]).unwrap())
    }

    /// `P_σ`: output `t` carries input `σ(t)`, so `x_i ↦ y_{σ^{-1}(i)}`.
    pub fn perm(sigma: &Permutation) -> Self {
        let inv = sigma.inverse();
        let images: Vec<Vec<usize>> = inv.one_line().into_iter().map(|t| vec![t]).collect();
        Self::undecorated(MonoidHom::from_letters(sigma.degree(), &images).unwrap())
    }

    /// `μ^{[k]}`: `μ^{[0]} = η`, `μ^{[1]} = Id`, `μ^{[k]} = μ ∘ (μ^{[k-1]} ⊗ Id)`.
    pub fn iter_mu(k: usize) -> Self {
        match k {
            0 => Self::eta(),
            1 => Self::identity(1),
            _ => compose_hat(
                &Self::mu(),
                &tensor_hat(&Self::iter_mu(k - 1), &Self::identity(1)),
            )
            .expect("μ^{[k]} recursion is well typed"),
        }
    }

    /// `Δ^{[k]}`: `Δ^{[0]} = ε`, `Δ^{[1]} = Id`, `Δ^{[k]} = (Δ^{[k-1]} ⊗ Id) ∘ Δ`.
    pub fn iter_delta(k: usize) -> Self {
        match k {
            0 => Self::eps(),
            1 => Self::identity(1),
            _ => compose_hat(
                &tensor_hat(&Self::iter_delta(k - 1), &Self::identity(1)),
                &Self::delta(),
            )
            .expect("Δ^{[k]} recursion is well typed"),
        }
    }

    pub fn hom(&self) -> &MonoidHom {
        &self.hom
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn source(&self) -> usize {
        self.hom.source_rank()
    }

    pub fn target(&self) -> usize {
        self.hom.target_rank()
    }

    /// Drops the decorations.
    pub fn forget(&self) -> MonoidHom {
        self.hom.clone()
    }

    pub fn normal_form(&self) -> NormalForm {
        let total = self.hom.total_image();
        NormalForm {
            p: self.hom.images().iter().map(Word::len).collect(),
            sigma: psi(&total, &self.perms).expect("arrow invariants checked at construction"),
            q: total.letter_counts(),
        }
    }

    /// `(μ^{[q]}, Id) ∘ (P_σ, Id) ∘ (Δ^{[p]}, Id)`.
    pub fn from_normal_form(nf: &NormalForm) -> Result<Self> {
        let nf = NormalForm::new(nf.p.clone(), nf.sigma.clone(), nf.q.clone())?;
        let deltas = tensor_all(nf.p.iter().map(|&k| Self::iter_delta(k)));
        let mus = tensor_all(nf.q.iter().map(|&k| Self::iter_mu(k)));
        let middle = compose_hat(&Self::perm(&nf.sigma), &deltas)?;
        compose_hat(&mus, &middle)
    }
}

fn tensor_all(arrows: impl Iterator<Item = HatArrow>) -> HatArrow {
    arrows.fold(HatArrow::identity(0), |acc, a| tensor_hat(&acc, &a))
}

/// `(g, τ⃗) ∘ (f, σ⃗)`.
pub fn compose_hat(g: &HatArrow, f: &HatArrow) -> Result<HatArrow> {
    let hom = g.hom.compose(&f.hom)?;
    let w = f.hom.total_image();
    let k = w.letter_counts();
    let gw = g.hom.total_image();
    let p: Vec<usize> = g.hom.images().iter().map(Word::len).collect();

    let repeat = |sizes: &[usize]| -> Vec<usize> {
        sizes
            .iter()
            .zip(&p)
            .flat_map(|(&ki, &pi)| std::iter::repeat_n(ki, pi))
            .collect()
    };
    let a = psi(&gw, &g.perms)?.expand_blocks(&repeat(&k))?;
    let b = Permutation::block_product_all(
        &f.perms
            .iter()
            .zip(&p)
            .map(|(s, &pi)| s.block_power(pi))
            .collect::<Vec<_>>(),
    );
    let c = Permutation::block_product_all(
        &k.iter()
            .zip(&p)
            .map(|(&ki, &pi)| gamma(ki, pi))
            .collect::<Vec<_>>(),
    );
    let r = rho(&w, &p)?;
    let gf_total = hom.total_image();
    let x = gf_total.xi();

    let total = x.compose(&r.compose(&c.compose(&b.compose(&a)?)?)?)?;
    let q = gf_total.letter_counts();
    let perms = total.split_blocks(&q).ok_or_else(|| {
        Error::Invariant(format!(
            "composite permutation {total:?} does not split along {q:?}"
        ))
    })?;
    Ok(HatArrow { hom, perms })
}

/// `(f * g, σ⃗τ⃗)`.
pub fn tensor_hat(a1: &HatArrow, a2: &HatArrow) -> HatArrow {
    let mut perms = a1.perms.clone();
    perms.extend(a2.perms.iter().cloned());
    HatArrow {
        hom: a1.hom.free_product(&a2.hom),
        perms,
    }
}

/// The lift of the free monoid functor. For `(f, σ)` with fibre sizes `k`,
/// `x_s ↦ y_{w_s}` and the decorations are those of `(w, perms) = Ψ^{-1}(k, σ)`;
/// when `σ` orders the fibres of `f`, `w_s = f(s)`.
pub fn fhat(a: &FSetHatArrow) -> HatArrow {
    let k = a.map().fibre_sizes();
    let (w, perms) = psi_inv(&k, a.sigma()).expect("fibre sizes sum to the degree of σ");
    let images = w
        .indices()
        .iter()
        .map(|&l| Word::from_zero_based(k.len(), vec![l]))
        .collect();
    HatArrow {
        hom: MonoidHom::new(k.len(), images).expect("letters lie in the target"),
        perms,
    }
}

#[derive(Serialize, Deserialize)]
struct HatArrowJson {
    hom: Vec<Vec<usize>>,
    perms: Vec<Permutation>,
}

impl Serialize for HatArrow {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HatArrowJson {
            hom: self.hom.images().iter().map(Word::letters).collect(),
            perms: self.perms.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HatArrow {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = HatArrowJson::deserialize(d)?;
        let hom = MonoidHom::from_letters(raw.perms.len(), &raw.hom)
            .map_err(serde::de::Error::custom)?;
        HatArrow::new(hom, raw.perms).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for HatArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HatArrow")
            .field("hom", &self.hom)
            .field("perms", &self.perms)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;
    use crate::words::{parse_hom, parse_word, Alphabet};

    fn cyc(text: &str, n: usize) -> Permutation {
        parse_cycles(text, n).unwrap()
    }

    fn word(text: &str) -> Word {
        parse_word(text, &Alphabet::letters(2)).unwrap()
    }

    fn arrow(hom: &str, target: &[&str], perms: Vec<Permutation>) -> HatArrow {
        let target = Alphabet::new(target.iter().map(|s| s.to_string()).collect());
        let (h, _, _) = parse_hom(hom, None, Some(&target)).unwrap();
        HatArrow::new(h, perms).unwrap()
    }

    /// The arrow x ↦ a²b, y ↦ abab with ((4321), (13)).
    fn two_letter_arrow() -> HatArrow {
        arrow(
            "x -> a^2b; y -> abab",
            &["a", "b"],
            vec![cyc("(4321)", 4), cyc("(13)", 3)],
        )
    }

    #[test]
    fn psi_examples() {
        assert_eq!(
            psi(&word("a^2bab"), &[cyc("(132)", 3), cyc("(12)", 2)])
                .unwrap()
                .one_line(),
            vec![4, 1, 2, 5, 3]
        );
        let st = Alphabet::new(vec!["s".into(), "t".into()]);
        let sts = parse_word("sts", &st).unwrap();
        assert_eq!(
            psi(&sts, &[cyc("(12)", 2), Permutation::identity(1)])
                .unwrap()
                .one_line(),
            vec![3, 1, 2]
        );
        let w = word("a^2babab");
        let got = psi(&w, &[cyc("(4321)", 4), cyc("(13)", 3)]).unwrap();
        assert_eq!(got.one_line(), vec![6, 1, 2, 4, 7, 5, 3]);
        assert_eq!(got.to_string(), "(165732)");
        let ids = [Permutation::identity(4), Permutation::identity(3)];
        assert_eq!(psi(&w, &ids).unwrap(), w.xi().inverse());
    }

    #[test]
    fn psi_rejects_wrong_degrees() {
        let err = psi(&word("a^2b"), &[Permutation::identity(2), Permutation::identity(2)]);
        assert_eq!(
            err,
            Err(Error::LetterDegree {
                letter: 2,
                expected: 1,
                got: 2
            })
        );
    }

    #[test]
    fn psi_inv_examples() {
        let (w, perms) = psi_inv(&[4, 3], &cyc("(165732)", 7)).unwrap();
        assert_eq!(w, word("a^2babab"));
        assert_eq!(perms, vec![cyc("(4321)", 4), cyc("(13)", 3)]);
        let (w, perms) = psi_inv(&[2, 1], &Permutation::identity(3)).unwrap();
        assert_eq!(w, word("a^2b"));
        assert!(perms.iter().all(Permutation::is_identity));
        assert!(psi_inv(&[2], &Permutation::identity(3)).is_err());
    }

    #[test]
    fn rho_examples() {
        let r = rho(&word("a^2bab"), &[1, 2]).unwrap();
        assert_eq!(r.one_line(), vec![1, 2, 5, 3, 4, 6, 7]);
        assert_eq!(r.to_string(), "(354)");
        assert!(rho(&word("a^2b^3"), &[3, 2]).unwrap().is_identity());
        let w = word("babba");
        assert_eq!(rho(&w, &[1, 1]).unwrap(), w.xi().inverse());
        assert!(rho(&w, &[1]).is_err());
    }

    #[test]
    fn composite_into_one_letter() {
        let f = arrow("x -> a^2bab", &["a", "b"], vec![cyc("(132)", 3), cyc("(12)", 2)]);
        let g = arrow("a -> s; b -> s^2", &["s"], vec![Permutation::identity(3)]);
        let gf = compose_hat(&g, &f).unwrap();
        assert_eq!(gf.perms()[0].one_line(), vec![5, 1, 2, 6, 3, 7, 4]);
        assert_eq!(gf.perms()[0].to_string(), "(1532)(467)");
        assert_eq!(gf.hom().image(1).len(), 7);
    }

    #[test]
    fn composite_into_two_letters() {
        let f = arrow(
            "x -> abab",
            &["a", "b"],
            vec![Permutation::identity(2), cyc("(12)", 2)],
        );
        let g = arrow(
            "a -> s; b -> ts",
            &["s", "t"],
            vec![cyc("(12)", 2), Permutation::identity(1)],
        );
        let gf = compose_hat(&g, &f).unwrap();
        assert_eq!(gf.perms()[0].to_string(), "(143)");
        assert_eq!(gf.perms()[1].to_string(), "(12)");
        assert_eq!(gf.normal_form().sigma.one_line(), vec![6, 3, 1, 4, 5, 2]);
    }

    #[test]
    fn mu_after_swap() {
        let got = compose_hat(&HatArrow::mu(), &HatArrow::perm(&cyc("(12)", 2))).unwrap();
        assert_eq!(got.hom(), HatArrow::mu().hom());
        assert_eq!(got.perms(), &[cyc("(12)", 2)]);
    }

    #[test]
    fn identity_is_neutral() {
        let a = two_letter_arrow();
        assert_eq!(compose_hat(&HatArrow::identity(2), &a).unwrap(), a);
        assert_eq!(compose_hat(&a, &HatArrow::identity(2)).unwrap(), a);
        let empty = HatArrow::identity(0);
        assert_eq!(tensor_hat(&empty, &a), a);
        assert_eq!(tensor_hat(&a, &empty), a);
    }

    #[test]
    fn normal_form_examples() {
        let nf = two_letter_arrow().normal_form();
        assert_eq!(nf.p, vec![3, 4]);
        assert_eq!(nf.q, vec![4, 3]);
        assert_eq!(nf.sigma.to_string(), "(165732)");
        assert_eq!(HatArrow::identity(3).normal_form(), NormalForm::identity(3));

        let f = arrow("x -> a^2bab", &["a", "b"], vec![cyc("(132)", 3), cyc("(12)", 2)]);
        let nf = f.normal_form();
        assert_eq!((nf.p.clone(), nf.q.clone()), (vec![5], vec![3, 2]));
        assert_eq!(nf.sigma.to_string(), "(14532)");
        assert_eq!(nf.sweedler(), "x ↦ x_(4)x_(1)x_(2) ⊗ x_(5)x_(3)");
    }

    #[test]
    fn from_normal_form_round_trips() {
        let a = two_letter_arrow();
        assert_eq!(HatArrow::from_normal_form(&a.normal_form()).unwrap(), a);
        assert_eq!(
            HatArrow::from_normal_form(&NormalForm::identity(1)).unwrap(),
            HatArrow::identity(1)
        );
        let bad = NormalForm {
            p: vec![2],
            sigma: Permutation::identity(2),
            q: vec![1],
        };
        assert!(HatArrow::from_normal_form(&bad).is_err());
    }

    #[test]
    fn sweedler_strings() {
        let nf = NormalForm::new(vec![2, 2], cyc("(23)", 4), vec![2, 2]).unwrap();
        assert_eq!(nf.sweedler(), "x⊗y ↦ x_(1)y_(1) ⊗ x_(2)y_(2)");
        let nf = NormalForm::new(vec![1, 2], Permutation::from_one_line(&[2, 3, 1]).unwrap(), vec![1, 0, 2])
            .unwrap();
        assert_eq!(nf.sweedler(), "x⊗y ↦ y_(1) ⊗ 1 ⊗ y_(2)x");
        let eps = HatArrow::eps().normal_form();
        assert_eq!(eps.sweedler(), "x ↦ ε(x)");
        assert_eq!(HatArrow::eta().normal_form().sweedler(), "1 ↦ 1");
        let nf = two_letter_arrow().normal_form();
        assert_eq!(nf.sweedler(), "x⊗y ↦ y_(3)x_(1)x_(2)y_(1) ⊗ y_(4)y_(2)x_(3)");
    }

    #[test]
    fn iterated_generators() {
        assert_eq!(HatArrow::iter_mu(0), HatArrow::eta());
        assert_eq!(HatArrow::iter_delta(1), HatArrow::identity(1));
        let m3 = HatArrow::iter_mu(3);
        assert_eq!(m3.hom().images().len(), 3);
        assert!(m3.perms()[0].is_identity());
        let d3 = HatArrow::iter_delta(3);
        assert_eq!(d3.hom().image(1).letters(), vec![1, 2, 3]);
    }

    #[test]
    fn fhat_of_collapse_is_mu() {
        use crate::fset::FinMap;
        let a = FSetHatArrow::new(FinMap::new(1, &[1, 1, 1]).unwrap(), Permutation::identity(3)).unwrap();
        assert_eq!(fhat(&a), HatArrow::iter_mu(3));
        assert_eq!(fhat(&FSetHatArrow::identity(2)), HatArrow::identity(2));
    }

    #[test]
    fn json_schema() {
        let a = two_letter_arrow();
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(
            text,
            r#"{"hom":[[1,1,2],[1,2,1,2]],"perms":[[4,1,2,3],[3,2,1]]}"#
        );
        assert_eq!(serde_json::from_str::<HatArrow>(&text).unwrap(), a);
        let nf = a.normal_form();
        let text = serde_json::to_string(&nf).unwrap();
        assert_eq!(text, r#"{"p":[3,4],"sigma":[6,1,2,4,7,5,3],"q":[4,3]}"#);
        assert_eq!(serde_json::from_str::<NormalForm>(&text).unwrap(), nf);
        assert!(serde_json::from_str::<HatArrow>(r#"{"hom":[[1]],"perms":[[1,2]]}"#).is_err());
        assert!(serde_json::from_str::<NormalForm>(r#"{"p":[1],"sigma":[1],"q":[2]}"#).is_err());
    }
}
