//! Malcev terms `q_c` and the nilpotency laws `L_c : q_c(x,y,z̄) ≈ q_c(y,x,z̄)`.

use super::{Equation, Term};

/// The word of variable names spelled by `q_c(first, second, z1, …)`.
///
/// `q_1(x,y) = xy` and `q_{c+1}(x,y,z̄) = q_c(x,y,z̄) z_c q_c(y,x,z̄)`.
pub fn malcev_word(c: usize, first: &str, second: &str) -> Vec<String> {
    assert!(c >= 1, "Malcev words start at class 1");
    if c == 1 {
        return vec![first.to_string(), second.to_string()];
    }
    let mut word = malcev_word(c - 1, first, second);
    word.push(format!("z{}", c - 1));
    word.extend(malcev_word(c - 1, second, first));
    word
}

fn product(word: &[String]) -> Term {
    let mut letters = word.iter().map(Term::var);
    let head = letters.next().expect("non-empty word");
    letters.fold(head, Term::mul)
}

/// The law `L_c` with variables `x, y, z1, …, z(c−1)`, products folded to the
/// left so printing is flat (`x·y·z1·y·x ≈ y·x·z1·x·y`). Returns `None` for
/// `c = 0`.
pub fn gen_lc(c: usize) -> Option<Equation> {
    if c == 0 {
        return None;
    }
    Some(Equation::new(product(&malcev_word(c, "x", "y")), product(&malcev_word(c, "y", "x"))))
}
