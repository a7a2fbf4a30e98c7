//! Free-group words and finite group presentations.
//!
//! Only abelian invariants are computed here: abelianization, perfectness,
//! and the chain complex of the presentation 2-complex. Triviality of a
//! presented group is undecidable in general and no word-problem solver is
//! attempted.
//!
//! Conventions, fixed once:
//! - a relation `w1 = w2` is stored as the relator `w1 * w2^-1`, reduced;
//! - `[x, y]` is the commutator `x y x^-1 y^-1`;
//! - the abelianization is the cokernel of the exponent matrix acting on
//!   `Z^generators` by its rows.

use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::chain::ChainComplex;
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::serial::JsonIntSeq;

/// One letter of a free-group word: a generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    fn inverted(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

/// A word in a free group, as a sequence of letters. Words are plain data;
/// [`Word::reduce`] computes the free normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn generator(gen: usize) -> Word {
        Word(vec![Letter {
            gen,
            inverse: false,
        }])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    /// `w^k`; negative exponents invert, zero gives the empty word.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.0);
        }
        Word(letters)
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// Free reduction: cancel adjacent `g g^-1` pairs until none remain.
    pub fn reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &letter in &self.0 {
            match stack.last() {
                Some(&top) if top.gen == letter.gen && top.inverse != letter.inverse => {
                    stack.pop();
                }
                _ => stack.push(letter),
            }
        }
        Word(stack)
    }

    pub fn is_reduced(&self) -> bool {
        self.0
            .windows(2)
            .all(|w| !(w[0].gen == w[1].gen && w[0].inverse != w[1].inverse))
    }

    /// Signed number of occurrences of one generator.
    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.0
            .iter()
            .filter(|l| l.gen == gen)
            .map(|l| if l.inverse { -1 } else { 1 })
            .sum()
    }

    fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|l| l.gen).max()
    }
}

/// A finite presentation: named generators and reduced relator words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Relators are reduced on construction; generator references must be in
    /// range and names unique.
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let n = generator_names.len();
        for (i, name) in generator_names.iter().enumerate() {
            if generator_names[..i].contains(name) {
                return Err(Error::InvalidPresentation(format!(
                    "duplicate generator name `{name}`"
                )));
            }
        }
        let relators: Vec<Word> = relators.iter().map(Word::reduce).collect();
        for r in &relators {
            if let Some(g) = r.max_generator() {
                if g >= n {
                    return Err(Error::InvalidPresentation(format!(
                        "relator references generator #{g} but only {n} are declared"
                    )));
                }
            }
        }
        Ok(Presentation {
            generator_names,
            relators,
        })
    }

    /// Builds from equations `lhs = rhs`, normalized to `lhs * rhs^-1`.
    pub fn from_relations(
        generator_names: Vec<String>,
        relations: Vec<(Word, Word)>,
    ) -> Result<Self> {
        let relators = relations
            .into_iter()
            .map(|(lhs, rhs)| lhs.concat(&rhs.inverse()))
            .collect();
        Presentation::new(generator_names, relators)
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn n_generators(&self) -> usize {
        self.generator_names.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name)
    }

    /// Relators-by-generators matrix of signed exponent counts.
    pub fn exponent_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.relators.len(), self.n_generators(), |r, g| {
            BigInt::from(self.relators[r].exponent_sum(g))
        })
    }

    /// `Z^generators` modulo the rows of the exponent matrix.
    pub fn abelianization(&self) -> AbelianizationResult {
        let (free_rank, torsion) = self.exponent_matrix().transpose().cokernel_structure();
        AbelianizationResult { free_rank, torsion }
    }

    pub fn is_perfect(&self) -> bool {
        self.abelianization().is_trivial()
    }

    /// Augmented chain complex of the presentation 2-complex: one vertex, a
    /// loop per generator, a 2-cell per relator. Loops have zero boundary;
    /// 2-cell boundaries are the abelianized relators.
    pub fn presentation_complex_chain(&self) -> ChainComplex {
        let n1 = self.n_generators();
        let n2 = self.relators.len();
        let aug = IntMatrix::from_fn(1, 1, |_, _| BigInt::from(1));
        let d1 = IntMatrix::zeros(1, n1);
        let d2 = self.exponent_matrix().transpose();
        ChainComplex::new(-1, vec![1, 1, n1, n2], vec![aug, d1, d2], true)
            .expect("presentation complex boundaries compose to zero")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} |", self.generator_names.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{}", display_word(r, &self.generator_names))?;
        }
        write!(f, " >")
    }
}

/// Renders a word with `^k` runs, e.g. `a^5 b^-3`; the empty word is `1`.
pub fn display_word(word: &Word, names: &[String]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < word.0.len() {
        let letter = word.0[i];
        let mut run = 1;
        while i + run < word.0.len() && word.0[i + run] == letter {
            run += 1;
        }
        let exp = if letter.inverse {
            -(run as i64)
        } else {
            run as i64
        };
        let name = &names[letter.gen];
        if exp == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{exp}"));
        }
        i += run;
    }
    parts.join(" ")
}

/// Abelianization `G/G'` as `(free_rank, invariant factors > 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianizationResult {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianizationResult {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianizationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for AbelianizationResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AbelianizationResult", 2)?;
        s.serialize_field("free_rank", &self.free_rank)?;
        s.serialize_field("torsion", &JsonIntSeq(&self.torsion))?;
        s.end()
    }
}

// ---- named corpus ----------------------------------------------------------

fn gen_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("x{i}")
    }
}

/// `< a, b | a^5 = b^3, b^3 = (a b)^2 >`.
pub fn hatcher() -> Presentation {
    let a = Word::generator(0);
    let b = Word::generator(1);
    let ab = a.concat(&b);
    Presentation::from_relations(
        vec!["a".into(), "b".into()],
        vec![(a.pow(5), b.pow(3)), (b.pow(3), ab.pow(2))],
    )
    .expect("valid")
}

/// The Higman group `< a, b, c, d | a = [d,a], b = [a,b], c = [b,c], d = [c,d] >`.
pub fn higman() -> Presentation {
    higman_n(4).expect("4 >= 1")
}

/// Cyclic Higman analog on `n >= 1` generators: `x_i = [x_(i-1), x_i]`.
pub fn higman_n(n: usize) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::OutOfRange("higman_n needs n >= 1".into()));
    }
    let names: Vec<String> = (0..n).map(gen_name).collect();
    let relations = (0..n)
        .map(|i| {
            let x = Word::generator(i);
            let prev = Word::generator((i + n - 1) % n);
            (x.clone(), Word::commutator(&prev, &x))
        })
        .collect();
    Presentation::from_relations(names, relations)
}

/// Baumslag-Solitar group `BS(m, n) = < a, b | a b^m a^-1 = b^n >`; `m`, `n`
/// nonzero.
pub fn baumslag_solitar(m: i64, n: i64) -> Result<Presentation> {
    if m == 0 || n == 0 {
        return Err(Error::OutOfRange("BS(m, n) needs nonzero m and n".into()));
    }
    let a = Word::generator(0);
    let b = Word::generator(1);
    let lhs = a.concat(&b.pow(m)).concat(&a.inverse());
    Presentation::from_relations(vec!["a".into(), "b".into()], vec![(lhs, b.pow(n))])
}

/// Free group on `n` generators (no relators).
pub fn free(n: usize) -> Presentation {
    let names = (0..n).map(gen_name).collect();
    Presentation::new(names, vec![]).expect("valid")
}

/// Cyclic group `< a | a^n >`, `n >= 1`.
pub fn cyclic(n: u64) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::OutOfRange("cyclic needs n >= 1".into()));
    }
    let a = Word::generator(0);
    Presentation::new(vec!["a".into()], vec![a.pow(n as i64)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[(usize, bool)]) -> Word {
        Word(
            letters
                .iter()
                .map(|&(gen, inverse)| Letter { gen, inverse })
                .collect(),
        )
    }

    #[test]
    fn reduce_cancels_adjacent_inverses() {
        assert_eq!(w(&[(0, false), (0, true)]).reduce(), Word::empty());
        // a b b^-1 a -> a a
        assert_eq!(
            w(&[(0, false), (1, false), (1, true), (0, false)]).reduce(),
            w(&[(0, false), (0, false)])
        );
        // [d, a] = d a d^-1 a^-1 is already reduced
        let c = Word::commutator(&Word::generator(3), &Word::generator(0));
        assert_eq!(c.reduce(), c);
    }

    #[test]
    fn distinct_generators_have_distinct_normal_forms() {
        // Free-unit injectivity at this scale: one-letter words are already
        // reduced and pairwise distinct.
        let words: Vec<Word> = (0..6).map(|g| Word::generator(g).reduce()).collect();
        for (i, w) in words.iter().enumerate() {
            assert_eq!(w.len(), 1);
            for other in &words[i + 1..] {
                assert_ne!(w, other);
            }
        }
    }

    #[test]
    fn reduce_is_idempotent_and_nonincreasing() {
        let word = w(&[
            (0, false),
            (1, false),
            (1, true),
            (1, true),
            (0, true),
            (0, false),
        ]);
        let once = word.reduce();
        assert!(once.len() <= word.len());
        assert_eq!(once.reduce(), once);
        assert!(once.is_reduced());
    }

    #[test]
    fn hatcher_exponent_matrix() {
        let m = hatcher().exponent_matrix();
        assert_eq!(
            m,
            IntMatrix::from_rows(&[vec![5, -3], vec![-2, 1]]).unwrap()
        );
    }

    #[test]
    fn hatcher_relators_as_words() {
        let p = hatcher();
        assert_eq!(p.n_generators(), 2);
        assert_eq!(p.relators().len(), 2);
        assert_eq!(
            display_word(&p.relators()[0], p.generator_names()),
            "a^5 b^-3"
        );
        // b^3 (ab)^-2 reduces to b^2 a^-1 b^-1 a^-1
        assert_eq!(
            display_word(&p.relators()[1], p.generator_names()),
            "b^2 a^-1 b^-1 a^-1"
        );
    }

    #[test]
    fn higman_exponent_matrix_is_identity() {
        // Each relator x [w,x]^-1 has exponent sum +1 in x and 0 in w; with
        // the fixed `lhs * rhs^-1` normalization the matrix is the identity.
        let m = higman().exponent_matrix();
        assert_eq!(m, IntMatrix::identity(4));
        assert_eq!(m.kernel_rank(), 0);
        assert_eq!(m.transpose().cokernel_structure(), (0, vec![]));
    }

    #[test]
    fn free_exponent_matrix_is_empty() {
        let m = free(3).exponent_matrix();
        assert_eq!(m.rows(), 0);
        assert_eq!(m.cols(), 3);
    }

    #[test]
    fn abelianizations() {
        assert!(higman().abelianization().is_trivial());
        let bs = baumslag_solitar(1, 2).unwrap().abelianization();
        assert_eq!(bs.free_rank, 1);
        assert!(bs.torsion.is_empty());
        for n in 2..=6u64 {
            let ab = cyclic(n).unwrap().abelianization();
            assert_eq!(ab.free_rank, 0);
            assert_eq!(ab.torsion, vec![BigInt::from(n)]);
        }
    }

    #[test]
    fn perfectness() {
        assert!(hatcher().is_perfect());
        assert!(higman().is_perfect());
        assert!(!free(1).is_perfect());
        assert!(!baumslag_solitar(1, 2).unwrap().is_perfect());
    }

    #[test]
    fn presentation_complex_homology() {
        let c = hatcher().presentation_complex_chain();
        assert!(c.homology(1).is_zero());
        assert!(c.homology(2).is_zero());

        let c = higman().presentation_complex_chain();
        assert!(c.homology(1).is_zero());
        assert!(c.homology(2).is_zero());

        let c = free(2).presentation_complex_chain();
        assert_eq!(c.homology(1).betti, 2);
        assert!(c.homology(1).torsion.is_empty());
        assert!(c.homology(2).is_zero());
    }

    #[test]
    fn homology_matches_abelianization_code_path() {
        for p in [
            hatcher(),
            higman(),
            free(2),
            cyclic(4).unwrap(),
            baumslag_solitar(1, 2).unwrap(),
            baumslag_solitar(3, -5).unwrap(),
        ] {
            let h1 = p.presentation_complex_chain().homology(1);
            let ab = p.abelianization();
            assert_eq!(h1.betti, ab.free_rank, "{p}");
            assert_eq!(h1.torsion, ab.torsion, "{p}");
        }
    }

    #[test]
    fn higman_family() {
        assert_eq!(higman_n(4).unwrap(), higman());
        for n in 1..=8 {
            let p = higman_n(n).unwrap();
            assert!(p.abelianization().is_trivial(), "higman_n({n})");
            assert_eq!(p.exponent_matrix().kernel_rank(), 0);
        }
        assert!(higman_n(0).is_err());
    }

    #[test]
    fn baumslag_solitar_relator() {
        let p = baumslag_solitar(1, 2).unwrap();
        // a b a^-1 b^-2
        assert_eq!(
            display_word(&p.relators()[0], p.generator_names()),
            "a b a^-1 b^-2"
        );
        assert!(baumslag_solitar(0, 2).is_err());
    }

    #[test]
    fn display_roundtrip_shapes() {
        assert_eq!(
            hatcher().to_string(),
            "< a, b | a^5 b^-3, b^2 a^-1 b^-1 a^-1 >"
        );
        assert_eq!(free(1).to_string(), "< a | >");
        assert_eq!(cyclic(1).unwrap().to_string(), "< a | a >");
    }

    #[test]
    fn constructor_validations() {
        assert!(Presentation::new(vec!["a".into(), "a".into()], vec![]).is_err());
        assert!(Presentation::new(vec!["a".into()], vec![Word::generator(1)]).is_err());
    }
}
