//! Reduced words and the shared textual element format.

use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::{Error, Result};

/// Canonical reduced word: repeatedly strip the smallest left descent. The
/// result is the lexicographically smallest reduced word for `w`.
pub(crate) fn reduced_word(sys: &CoxeterSystem, w: &GroupElement) -> Vec<usize> {
    let mut word = Vec::with_capacity(w.length());
    let mut current = w.clone();
    while !current.is_identity() {
        let i = (1..=sys.rank())
            .find(|&i| !current.has_left_ascent(i).expect("index in range"))
            .expect("non-identity element has a left descent");
        word.push(i);
        current = sys
            .generator(i)
            .expect("valid index")
            .multiply(&current)
            .expect("same system");
    }
    word
}

pub(crate) fn word_to_text(word: &[usize]) -> String {
    word.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn parse_word_text(sys: &CoxeterSystem, text: &str) -> Result<GroupElement> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(sys.identity());
    }
    let mut word = Vec::new();
    for token in trimmed.split_whitespace() {
        let i: usize = token.parse().map_err(|_| Error::Parse {
            what: "element word",
            input: text.to_string(),
        })?;
        word.push(i);
    }
    sys.element_from_word(&word)
}

#[cfg(test)]
mod tests {
    use crate::coxeter::{CoxeterSystem, CoxeterType};

    #[test]
    fn word_roundtrip_is_reduced() {
        let sys = CoxeterSystem::build(CoxeterType::b(3).unwrap()).unwrap();
        for w in sys.elements().unwrap() {
            let word = sys.reduced_word(w);
            assert_eq!(word.len(), w.length(), "canonical word is reduced");
            assert_eq!(&sys.element_from_word(&word).unwrap(), w);
        }
    }

    #[test]
    fn identity_is_empty_text() {
        let sys = CoxeterSystem::build(CoxeterType::a(2).unwrap()).unwrap();
        assert_eq!(sys.element_to_text(&sys.identity()), "");
        assert!(sys.element_from_text("").unwrap().is_identity());
        assert!(sys.element_from_text("  ").unwrap().is_identity());
    }

    #[test]
    fn longest_element_of_b2_formats_as_alternating_word() {
        let sys = CoxeterSystem::build(CoxeterType::b(2).unwrap()).unwrap();
        let w0 = sys.longest_element(sys.full_set());
        assert_eq!(sys.element_to_text(&w0), "1 2 1 2");
    }
}
