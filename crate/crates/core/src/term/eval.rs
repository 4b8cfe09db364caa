use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::{Equation, QuasiEquation, Term};

/// Variable name → element.
pub type Assignment<E> = BTreeMap<String, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("residual undefined: {0}")]
    ResidualUndefined(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("structure has not been validated")]
    StructureNotValidated,
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// An algebra in the residuated-lattice signature.
///
/// `ldiv(a, b)` is `a\b` and `rdiv(a, b)` is `a/b`. Residuals may fail only
/// for search-backed infinite instances whose search bound was too small.
pub trait Algebra {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn unit(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn ldiv(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, EvalError>;
    fn rdiv(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, EvalError>;
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

/// A finite algebra whose carrier can be listed.
pub trait FiniteAlgebra: Algebra {
    /// The carrier in index order.
    fn elements(&self) -> Vec<Self::Elem>;

    /// Whether the structure passed axiom validation.
    fn is_validated(&self) -> bool {
        true
    }
}

/// Outcome of checking an equation or quasi-equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<E> {
    Holds,
    Fails(Assignment<E>),
}

impl<E> Verdict<E> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Assignment<E>> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

pub fn eval_term<A: Algebra>(t: &Term, env: &Assignment<A::Elem>, alg: &A) -> Result<A::Elem, EvalError> {
    Ok(match t {
        Term::Var(name) => env.get(name).cloned().ok_or_else(|| EvalError::UnboundVariable(name.clone()))?,
        Term::Unit => alg.unit(),
        Term::Mul(a, b) => alg.mul(&eval_term(a, env, alg)?, &eval_term(b, env, alg)?),
        Term::LDiv(a, b) => alg.ldiv(&eval_term(a, env, alg)?, &eval_term(b, env, alg)?)?,
        Term::RDiv(a, b) => alg.rdiv(&eval_term(a, env, alg)?, &eval_term(b, env, alg)?)?,
        Term::Meet(a, b) => alg.meet(&eval_term(a, env, alg)?, &eval_term(b, env, alg)?),
        Term::Join(a, b) => alg.join(&eval_term(a, env, alg)?, &eval_term(b, env, alg)?),
    })
}

fn satisfies<A: Algebra>(eq: &Equation, env: &Assignment<A::Elem>, alg: &A) -> Result<bool, EvalError> {
    Ok(eval_term(&eq.lhs, env, alg)? == eval_term(&eq.rhs, env, alg)?)
}

fn satisfies_quasi<A: Algebra>(q: &QuasiEquation, env: &Assignment<A::Elem>, alg: &A) -> Result<bool, EvalError> {
    for p in &q.premises {
        if !satisfies(p, env, alg)? {
            return Ok(true);
        }
    }
    satisfies(&q.conclusion, env, alg)
}

/// Visits every assignment of `vars` over `carrier` in lexicographic order
/// (first variable most significant), stopping at the first `Some`.
fn first_assignment<E: Clone, R>(
    vars: &[String],
    carrier: &[E],
    mut visit: impl FnMut(&Assignment<E>) -> Result<Option<R>, EvalError>,
) -> Result<Option<R>, EvalError> {
    if carrier.is_empty() {
        return Ok(None);
    }
    let k = vars.len();
    let mut idx = vec![0usize; k];
    loop {
        let env: Assignment<E> = vars.iter().cloned().zip(idx.iter().map(|&i| carrier[i].clone())).collect();
        if let Some(r) = visit(&env)? {
            return Ok(Some(r));
        }
        // odometer increment, last variable fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < carrier.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Exhaustive check over all assignments. The witness on failure is the
/// lexicographically first assignment in carrier index order, variables
/// sorted by name.
pub fn check_equation<A: FiniteAlgebra>(eq: &Equation, s: &A) -> Result<Verdict<A::Elem>, CheckError> {
    check_quasiequation(&QuasiEquation::from(eq.clone()), s)
}

pub fn check_quasiequation<A: FiniteAlgebra>(q: &QuasiEquation, s: &A) -> Result<Verdict<A::Elem>, CheckError> {
    if !s.is_validated() {
        return Err(CheckError::StructureNotValidated);
    }
    let vars: Vec<String> = q.variables().into_iter().collect();
    let carrier = s.elements();
    let hit = first_assignment(&vars, &carrier, |env| {
        Ok(if satisfies_quasi(q, env, s)? { None } else { Some(env.clone()) })
    })?;
    Ok(hit.map_or(Verdict::Holds, Verdict::Fails))
}

/// Checks an equation on the given assignments only (for infinite algebras).
pub fn check_equation_on<A: Algebra>(
    eq: &Equation,
    alg: &A,
    assignments: impl IntoIterator<Item = Assignment<A::Elem>>,
) -> Result<Verdict<A::Elem>, EvalError> {
    check_quasiequation_on(&QuasiEquation::from(eq.clone()), alg, assignments)
}

pub fn check_quasiequation_on<A: Algebra>(
    q: &QuasiEquation,
    alg: &A,
    assignments: impl IntoIterator<Item = Assignment<A::Elem>>,
) -> Result<Verdict<A::Elem>, EvalError> {
    for env in assignments {
        if !satisfies_quasi(q, &env, alg)? {
            return Ok(Verdict::Fails(env));
        }
    }
    Ok(Verdict::Holds)
}
