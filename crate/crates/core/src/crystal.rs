//! Crystal operators via the signature rule, on words, tableaux and biwords.

use crate::error::{Error, Result};
use crate::rsk::{rsk, Biword, SupportMatrix};
use crate::tableau::{Tableau, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mark {
    Plus,
    Minus,
}

/// One letter equal to `i` (`+`) or `i+1` (`−`) at `position` in the word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedLetter {
    pub position: usize,
    pub mark: Mark,
    pub survives: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    pub letters: Vec<SignedLetter>,
}

impl Signature {
    /// Surviving marks read left to right; always of the form `+…+−…−`.
    pub fn reduced(&self) -> Vec<Mark> {
        self.letters.iter().filter(|l| l.survives).map(|l| l.mark).collect()
    }

    pub fn to_string_marks(&self) -> String {
        self.reduced().iter().map(|m| if *m == Mark::Plus { '+' } else { '-' }).collect()
    }
}

/// Cancels adjacent `−+` pairs until none remain. A `+` is cancelled by the
/// nearest unmatched `−` to its left.
pub fn signature(w: &Word, i: u32) -> Signature {
    let mut letters: Vec<SignedLetter> = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    for (position, &x) in w.letters().iter().enumerate() {
        let mark = if x == i {
            Mark::Plus
        } else if x == i + 1 {
            Mark::Minus
        } else {
            continue;
        };
        let mut survives = true;
        match mark {
            Mark::Minus => open.push(letters.len()),
            Mark::Plus => {
                if let Some(k) = open.pop() {
                    letters[k].survives = false;
                    survives = false;
                }
            }
        }
        letters.push(SignedLetter { position, mark, survives });
    }
    let sig = Signature { letters };
    let red = sig.reduced();
    assert!(red.windows(2).all(|p| !(p[0] == Mark::Minus && p[1] == Mark::Plus)), "signature not of the form +…+−…−");
    sig
}

/// Lowers: the `i` at the rightmost surviving `+` becomes `i+1`.
pub fn f_tilde(w: &Word, i: u32) -> Option<Word> {
    let sig = signature(w, i);
    let pos = sig.letters.iter().rev().find(|l| l.survives && l.mark == Mark::Plus)?.position;
    let mut v = w.letters().to_vec();
    v[pos] = i + 1;
    Some(Word(v))
}

/// Raises: the `i+1` at the leftmost surviving `−` becomes `i`.
pub fn e_tilde(w: &Word, i: u32) -> Option<Word> {
    let sig = signature(w, i);
    let pos = sig.letters.iter().find(|l| l.survives && l.mark == Mark::Minus)?.position;
    let mut v = w.letters().to_vec();
    v[pos] = i;
    Some(Word(v))
}

fn on_tableau(t: &Tableau, w: Option<Word>) -> Result<Option<Tableau>> {
    match w {
        None => Ok(None),
        Some(w) => t
            .refill_from_reading_word(&w)
            .map(Some)
            .map_err(|e| Error::Invariant(format!("crystal operator left the set of SSYT: {e}"))),
    }
}

pub fn f_tilde_tableau(t: &Tableau, i: u32) -> Result<Option<Tableau>> {
    on_tableau(t, f_tilde(&t.reading_word(), i))
}

pub fn e_tilde_tableau(t: &Tableau, i: u32) -> Result<Option<Tableau>> {
    on_tableau(t, e_tilde(&t.reading_word(), i))
}

/// Acts on the `j` word of the right-lex representative, keeping the `i` word.
pub fn f_tilde_biword_right(b: &Biword, i: u32) -> Option<Biword> {
    let (is, js): (Vec<u32>, Vec<u32>) = b.right_lex().iter().copied().unzip();
    let js = f_tilde(&Word(js), i)?;
    Some(Biword::new(is.into_iter().zip(js.0).collect()).expect("positive letters"))
}

/// Acts on the `i` word of the left-lex representative, keeping the `j` word.
pub fn f_tilde_biword_left(b: &Biword, i: u32) -> Option<Biword> {
    let (is, js): (Vec<u32>, Vec<u32>) = b.left_lex().into_iter().unzip();
    let is = f_tilde(&Word(is), i)?;
    Some(Biword::new(is.0.into_iter().zip(js).collect()).expect("positive letters"))
}

/// Which side of the biword the operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Checks that RSK intertwines the right structure on biwords with `f̃_i` on
/// `P`, and the left structure with `f̃_i` on `Q`. Returns the first
/// counterexample.
pub fn verify_commutation(family: &[SupportMatrix], colors: &[u32], sides: &[Side]) -> std::result::Result<(), String> {
    for a in family {
        let (p, q) = rsk(a);
        let b = a.to_biword();
        for &i in colors {
            for &side in sides {
                let moved = match side {
                    Side::Right => f_tilde_biword_right(&b, i),
                    Side::Left => f_tilde_biword_left(&b, i),
                };
                let target = match side {
                    Side::Right => f_tilde_tableau(&p, i).map_err(|e| e.to_string())?.map(|p2| (p2, q.clone())),
                    Side::Left => f_tilde_tableau(&q, i).map_err(|e| e.to_string())?.map(|q2| (p.clone(), q2)),
                };
                let got = moved.as_ref().map(|m| rsk(&m.to_matrix()));
                if got != target {
                    return Err(format!(
                        "biword {b}, i={i}, {side:?}: moved biword {:?}, rsk gives {:?}, expected {:?}",
                        moved.map(|m| m.to_string()),
                        got.map(|(x, y)| format!("({x}, {y})")),
                        target.map(|(x, y)| format!("({x}, {y})")),
                    ));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{Partition, SkewShape};
    use crate::rsk::enumerate_matrices;
    use crate::tableau::enumerate_ssyt;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        assert_eq!(f_tilde(&w("34321222342"), 2), Some(w("34321223342")));
        assert_eq!(signature(&w("34321222342"), 2).to_string_marks(), "++");
    }

    #[test]
    fn small_cases() {
        assert_eq!(f_tilde(&Word(vec![]), 1), None);
        assert_eq!(f_tilde(&w("1"), 1), Some(w("2")));
        assert_eq!(e_tilde(&w("2"), 1), Some(w("1")));
        // only −+ pairs cancel, so +− survives
        assert_eq!(e_tilde(&w("12"), 1), Some(w("11")));
        assert_eq!(e_tilde(&w("21"), 1), None);
        assert_eq!(f_tilde(&w("21"), 1), None);
    }

    #[test]
    fn tableau_cases() {
        let t: Tableau = "1".parse().unwrap();
        assert_eq!(f_tilde_tableau(&t, 1).unwrap(), Some("2".parse().unwrap()));
        let col: Tableau = "1 / 2".parse().unwrap();
        assert_eq!(f_tilde_tableau(&col, 1).unwrap(), None);
    }

    #[test]
    fn biword_cases() {
        assert_eq!(f_tilde_biword_right(&Biword::empty(), 1), None);
        let b: Biword = "1,1".parse().unwrap();
        assert_eq!(f_tilde_biword_right(&b, 1).unwrap().to_string(), "1,2");
        assert_eq!(f_tilde_biword_left(&b, 1).unwrap().to_string(), "2,1");
    }

    #[test]
    fn closure_on_tableaux() {
        for size in 0..=5 {
            for lam in Partition::all_of_size(size) {
                for t in enumerate_ssyt(&SkewShape::straight(lam.clone()), 4) {
                    for i in 1..4 {
                        if let Some(f) = f_tilde_tableau(&t, i).unwrap() {
                            assert_eq!(e_tilde_tableau(&f, i).unwrap().as_ref(), Some(&t));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn commutation_small_families() {
        let all = [Side::Left, Side::Right];
        assert!(verify_commutation(&[SupportMatrix::default()], &[1], &all).is_ok());
        let one = SupportMatrix::new([((1, 1), 1)]).unwrap();
        assert!(verify_commutation(std::slice::from_ref(&one), &[1], &all).is_ok());
        let (p, q) = rsk(&f_tilde_biword_right(&one.to_biword(), 1).unwrap().to_matrix());
        assert_eq!((p.to_string(), q.to_string()), ("2".into(), "1".into()));
        assert!(verify_commutation(&enumerate_matrices(3, 3, 4), &[1, 2], &all).is_ok());
    }

    fn word_strategy() -> impl Strategy<Value = Word> {
        prop::collection::vec(1u32..=4, 0..=6).prop_map(Word)
    }

    proptest! {
        #[test]
        fn f_and_e_are_partial_inverses(word in word_strategy(), i in 1u32..4) {
            if let Some(f) = f_tilde(&word, i) {
                prop_assert_eq!(e_tilde(&f, i), Some(word.clone()));
                let diffs: Vec<usize> = (0..word.len()).filter(|&k| word.0[k] != f.0[k]).collect();
                prop_assert_eq!(diffs.len(), 1);
                prop_assert_eq!((word.0[diffs[0]], f.0[diffs[0]]), (i, i + 1));
            }
            if let Some(e) = e_tilde(&word, i) {
                prop_assert_eq!(f_tilde(&e, i), Some(word.clone()));
            }
        }

        #[test]
        fn reduced_signature_shape(word in word_strategy(), i in 1u32..4) {
            let red = signature(&word, i).to_string_marks();
            prop_assert!(!red.contains("-+"));
        }
    }
}
