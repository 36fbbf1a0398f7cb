//! Words in finitely generated free monoids and homomorphisms between them.
//!
//! A [`Word`] over an alphabet of size `m` is a finite sequence of letters
//! `1..=m` (1-based in the public API). A [`MonoidHom`] `F(x_1..x_n) ->
//! F(y_1..y_m)` is determined by the `n` image words.
//!
//! This module also hosts the position gadgets used by the composite law:
//! [`Word::phi`] (letter positions as a partition), [`phi_inv`] and
//! [`Word::xi`] (the permutation sorting a word's positions by letter).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: usize,
    // 0-based letters
    letters: Vec<usize>,
}

/// Letter counts of a word: `total = π(w)` and `per_letter[i] = π_{i+1}(w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counts {
    pub total: usize,
    pub per_letter: Vec<usize>,
}

impl Word {
    pub fn empty(alphabet: usize) -> Self {
        Word {
            alphabet,
            letters: Vec::new(),
        }
    }

    /// Builds a word from 1-based letters.
    pub fn new(alphabet: usize, letters: &[usize]) -> Result<Self> {
        let mut zero_based = Vec::with_capacity(letters.len());
        for &l in letters {
            if l == 0 || l > alphabet {
                return Err(Error::LetterOutOfRange {
                    letter: l,
                    alphabet,
                });
            }
            zero_based.push(l - 1);
        }
        Ok(Word {
            alphabet,
            letters: zero_based,
        })
    }

    pub(crate) fn from_zero_based(alphabet: usize, letters: Vec<usize>) -> Self {
        debug_assert!(letters.iter().all(|&l| l < alphabet));
        Word { alphabet, letters }
    }

    /// `y_1 y_2 ... y_m`, every letter once in order.
    pub fn sorted_singletons(alphabet: usize) -> Self {
        Word::from_zero_based(alphabet, (0..alphabet).collect())
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// 1-based letters.
    pub fn letters(&self) -> Vec<usize> {
        self.letters.iter().map(|l| l + 1).collect()
    }

    pub(crate) fn indices(&self) -> &[usize] {
        &self.letters
    }

    pub fn counts(&self) -> Counts {
        Counts {
            total: self.letters.len(),
            per_letter: self.letter_counts(),
        }
    }

    pub fn letter_counts(&self) -> Vec<usize> {
        let mut per_letter = vec![0; self.alphabet];
        for &l in &self.letters {
            per_letter[l] += 1;
        }
        per_letter
    }

    pub fn concat(&self, rhs: &Word) -> Result<Word> {
        if self.alphabet != rhs.alphabet {
            return Err(Error::RankMismatch {
                expected: self.alphabet,
                got: rhs.alphabet,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Ok(Word {
            alphabet: self.alphabet,
            letters,
        })
    }

    /// Reinterprets the word over a larger alphabet with letters shifted by `shift`.
    pub fn shifted(&self, shift: usize, alphabet: usize) -> Word {
        debug_assert!(self.alphabet + shift <= alphabet);
        Word {
            alphabet,
            letters: self.letters.iter().map(|l| l + shift).collect(),
        }
    }

    /// True when all occurrences of letter 1 come first, then letter 2, and so on.
    pub fn is_sorted(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] <= w[1])
    }

    /// The partition `S_1, ..., S_m` of `{1..π(w)}`: `S_i` lists, left to
    /// right, the positions where letter `i` occurs.
    pub fn phi(&self) -> Vec<Vec<usize>> {
        let mut parts = vec![Vec::new(); self.alphabet];
        for (pos, &l) in self.letters.iter().enumerate() {
            parts[l].push(pos + 1);
        }
        parts
    }

    /// `ξ_w`: sends the `r`-th position of letter `i` to
    /// `π_1(w) + ... + π_{i-1}(w) + r`.
    pub fn xi(&self) -> Permutation {
        let counts = self.letter_counts();
        let mut next: Vec<usize> = Vec::with_capacity(self.alphabet);
        let mut acc = 0;
        for &c in &counts {
            next.push(acc);
            acc += c;
        }
        let images = self
            .letters
            .iter()
            .map(|&l| {
                let v = next[l];
                next[l] += 1;
                v
            })
            .collect();
        Permutation::from_zero_based_unchecked(images)
    }
}

/// Rebuilds the word whose letter positions are the given partition of `{1..N}`.
pub fn phi_inv(parts: &[Vec<usize>]) -> Result<Word> {
    let total: usize = parts.iter().map(Vec::len).sum();
    let mut letters = vec![usize::MAX; total];
    for (letter, part) in parts.iter().enumerate() {
        for &pos in part {
            if pos == 0 || pos > total {
                return Err(Error::InvalidPartition(format!(
                    "position {pos} outside 1..={total}"
                )));
            }
            if letters[pos - 1] != usize::MAX {
                return Err(Error::InvalidPartition(format!(
                    "position {pos} appears twice"
                )));
            }
            letters[pos - 1] = letter;
        }
    }
    Ok(Word::from_zero_based(parts.len(), letters))
}

/// All words with `counts[i]` occurrences of letter `i + 1`, in
/// lexicographic order. This is the set `𝒲(k_1, ..., k_m)`.
pub fn words_with_counts(counts: &[usize]) -> Vec<Word> {
    fn go(remaining: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Word>) {
        if remaining.iter().all(|&c| c == 0) {
            out.push(Word::from_zero_based(remaining.len(), prefix.clone()));
            return;
        }
        for l in 0..remaining.len() {
            if remaining[l] > 0 {
                remaining[l] -= 1;
                prefix.push(l);
                go(remaining, prefix, out);
                prefix.pop();
                remaining[l] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut counts.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// A monoid homomorphism `F(x_1..x_n) -> F(y_1..y_m)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonoidHom {
    target: usize,
    images: Vec<Word>,
}

impl MonoidHom {
    pub fn new(target: usize, images: Vec<Word>) -> Result<Self> {
        for w in &images {
            if w.alphabet != target {
                return Err(Error::RankMismatch {
                    expected: target,
                    got: w.alphabet,
                });
            }
        }
        Ok(MonoidHom { target, images })
    }

    /// Builds a hom from 1-based letter lists.
    pub fn from_letters(target: usize, images: &[Vec<usize>]) -> Result<Self> {
        let images = images
            .iter()
            .map(|l| Word::new(target, l))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonoidHom { target, images })
    }

    pub fn identity(n: usize) -> Self {
        MonoidHom {
            target: n,
            images: (0..n).map(|i| Word::from_zero_based(n, vec![i])).collect(),
        }
    }

    pub fn source_rank(&self) -> usize {
        self.images.len()
    }

    pub fn target_rank(&self) -> usize {
        self.target
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of the 1-based generator `i`.
    pub fn image(&self, i: usize) -> &Word {
        &self.images[i - 1]
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.alphabet != self.source_rank() {
            return Err(Error::RankMismatch {
                expected: self.source_rank(),
                got: w.alphabet,
            });
        }
        let mut letters = Vec::new();
        for &l in &w.letters {
            letters.extend_from_slice(&self.images[l].letters);
        }
        Ok(Word::from_zero_based(self.target, letters))
    }

    /// `f(x_1 x_2 ... x_n)`, the concatenation of all images.
    pub fn total_image(&self) -> Word {
        let letters = self
            .images
            .iter()
            .flat_map(|w| w.letters.iter().copied())
            .collect();
        Word::from_zero_based(self.target, letters)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MonoidHom) -> Result<MonoidHom> {
        if inner.target != self.source_rank() {
            return Err(Error::RankMismatch {
                expected: self.source_rank(),
                got: inner.target,
            });
        }
        let images = inner
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonoidHom {
            target: self.target,
            images,
        })
    }

    /// The free product `self * rhs`; letters of `rhs` are shifted past `self`'s target.
    pub fn free_product(&self, rhs: &MonoidHom) -> MonoidHom {
        let target = self.target + rhs.target;
        let mut images: Vec<Word> = self
            .images
            .iter()
            .map(|w| w.shifted(0, target))
            .collect();
        images.extend(rhs.images.iter().map(|w| w.shifted(self.target, target)));
        MonoidHom { target, images }
    }
}

/// Ordered letter names used to read and print words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new(names: Vec<String>) -> Self {
        Alphabet { names }
    }

    /// `a, b, c, ...` (then `y1, y2, ...` if more than 26 letters are needed).
    pub fn letters(n: usize) -> Self {
        if n <= 26 {
            Alphabet {
                names: (0..n)
                    .map(|i| ((b'a' + i as u8) as char).to_string())
                    .collect(),
            }
        } else {
            Alphabet::indexed("y", n)
        }
    }

    /// `base1, base2, ..., basen`.
    pub fn indexed(base: &str, n: usize) -> Self {
        Alphabet {
            names: (1..=n).map(|i| format!("{base}{i}")).collect(),
        }
    }

    /// Distinct names sorted alphabetically, with numeric suffixes compared as numbers.
    pub fn sorted_from<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
        names.sort_by(|a, b| name_order(a, b));
        names.dedup();
        Alphabet { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// 1-based index of `name`.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name).map(|i| i + 1)
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        let letters = &w.letters;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            let name = self
                .names
                .get(letters[i])
                .cloned()
                .unwrap_or_else(|| format!("?{}", letters[i] + 1));
            // Multi-character names need a separator so juxtaposition stays readable.
            if !out.is_empty() && name.len() > 1 {
                out.push(' ');
            }
            out.push_str(&name);
            if j - i > 1 {
                out.push_str(&format!("^{}", j - i));
            }
            i = j;
        }
        out
    }

    pub fn format_hom(&self, source: &Alphabet, f: &MonoidHom) -> String {
        f.images
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let src = source
                    .names
                    .get(i)
                    .cloned()
                    .unwrap_or_else(|| format!("x{}", i + 1));
                format!("{src} -> {}", self.format_word(w))
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn split_name(name: &str) -> (&str, Option<u64>) {
    let digits_at = name
        .find(|c: char| c.is_ascii_digit())
        .unwrap_or(name.len());
    let (base, num) = name.split_at(digits_at);
    let base = base.strip_suffix('_').unwrap_or(base);
    (base, num.parse().ok())
}

fn name_order(a: &str, b: &str) -> Ordering {
    split_name(a).cmp(&split_name(b)).then_with(|| a.cmp(b))
}

/// Splits word text such as `a^2bab` or `x1 x2^3` into `(name, power)` pairs.
/// `1` and the empty string denote the empty word.
fn tokenize_word(text: &str, base_pos: usize) -> Result<Vec<(String, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |pos: usize, msg: String| Error::Parse {
        pos: base_pos + pos,
        msg,
    };
    if text.trim() == "1" {
        return Ok(out);
    }
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() || c == b'*' || c == b'.' {
            i += 1;
            continue;
        }
        if !c.is_ascii_lowercase() {
            return Err(err(i, format!("unexpected character {:?}", c as char)));
        }
        let start = i;
        i += 1;
        if i < bytes.len() && bytes[i] == b'_' {
            i += 1;
            if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                return Err(err(i, "expected digits after '_'".to_string()));
            }
        }
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let name = text[start..i].to_string();
        let mut power = 1;
        let mut j = i;
        while j < bytes.len() && bytes[j] == b' ' {
            j += 1;
        }
        if j < bytes.len() && bytes[j] == b'^' {
            j += 1;
            while j < bytes.len() && bytes[j] == b' ' {
                j += 1;
            }
            let digits_start = j;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            power = text[digits_start..j]
                .parse()
                .map_err(|_| err(digits_start, "expected exponent".to_string()))?;
            if power > 1 << 16 {
                return Err(err(digits_start, format!("exponent {power} too large")));
            }
            i = j;
        }
        out.push((name, power));
    }
    Ok(out)
}

/// Reads `text` as a word over `alphabet`.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    parse_word_at(text, alphabet, 0)
}

fn parse_word_at(text: &str, alphabet: &Alphabet, base_pos: usize) -> Result<Word> {
    let mut letters = Vec::new();
    for (name, power) in tokenize_word(text, base_pos)? {
        let idx = alphabet.index_of(&name).ok_or_else(|| Error::Parse {
            pos: base_pos,
            msg: format!("letter {name:?} not in alphabet {:?}", alphabet.names),
        })?;
        letters.extend(std::iter::repeat_n(idx - 1, power));
    }
    Ok(Word::from_zero_based(alphabet.len(), letters))
}

/// Reads a word, taking the alphabet to be its distinct letters in alphabetical order.
pub fn parse_word_inferred(text: &str) -> Result<(Word, Alphabet)> {
    let tokens = tokenize_word(text, 0)?;
    let alphabet = Alphabet::sorted_from(tokens.iter().map(|(n, _)| n.clone()));
    Ok((parse_word(text, &alphabet)?, alphabet))
}

/// Reads a homomorphism written as `x1 -> a^2 b; x2 -> abab` (statements may
/// also be separated by newlines). Without explicit alphabets, the source
/// alphabet is the left-hand names and the target alphabet is every letter
/// used on a right-hand side, both sorted alphabetically.
pub fn parse_hom(
    text: &str,
    source: Option<&Alphabet>,
    target: Option<&Alphabet>,
) -> Result<(MonoidHom, Alphabet, Alphabet)> {
    let mut rules: Vec<(String, usize, &str)> = Vec::new();
    let mut offset = 0;
    for stmt in text.split([';', '\n']) {
        let here = offset;
        offset += stmt.len() + 1;
        if stmt.trim().is_empty() {
            continue;
        }
        let Some(arrow) = stmt.find("->") else {
            return Err(Error::Parse {
                pos: here,
                msg: "expected 'name -> word'".to_string(),
            });
        };
        let lhs = stmt[..arrow].trim();
        let lhs_tokens = tokenize_word(lhs, here)?;
        if lhs_tokens.len() != 1 || lhs_tokens[0].1 != 1 {
            return Err(Error::Parse {
                pos: here,
                msg: format!("left-hand side {lhs:?} must be a single generator"),
            });
        }
        rules.push((lhs_tokens[0].0.clone(), here + arrow + 2, &stmt[arrow + 2..]));
    }
    let source = match source {
        Some(a) => a.clone(),
        None => Alphabet::sorted_from(rules.iter().map(|(n, _, _)| n.clone())),
    };
    let target = match target {
        Some(a) => a.clone(),
        None => {
            let mut names = Vec::new();
            for (_, pos, rhs) in &rules {
                names.extend(tokenize_word(rhs, *pos)?.into_iter().map(|(n, _)| n));
            }
            Alphabet::sorted_from(names)
        }
    };
    let mut images: Vec<Option<Word>> = vec![None; source.len()];
    for (name, pos, rhs) in &rules {
        let idx = source.index_of(name).ok_or_else(|| Error::Parse {
            pos: *pos,
            msg: format!("generator {name:?} not in source alphabet"),
        })?;
        if images[idx - 1].is_some() {
            return Err(Error::Parse {
                pos: *pos,
                msg: format!("generator {name:?} defined twice"),
            });
        }
        images[idx - 1] = Some(parse_word_at(rhs, &target, *pos)?);
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, w)| {
            w.ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("no image given for {:?}", source.names[i]),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let hom = MonoidHom::new(target.len(), images)?;
    Ok((hom, source, target))
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Word({}; {})",
            self.alphabet,
            Alphabet::letters(self.alphabet).format_word(self)
        )
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Alphabet::letters(self.alphabet).format_word(self))
    }
}

impl fmt::Debug for MonoidHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let target = Alphabet::letters(self.target);
        let source = Alphabet::indexed("x", self.source_rank());
        write!(f, "MonoidHom({})", target.format_hom(&source, self))
    }
}
