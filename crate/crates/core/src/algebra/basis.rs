//! Linear bases of the algebras of finite acyclic graphs.

use super::{Algebra, AlgebraError, Level, Monomial};
use crate::path::Path;

/// All normal-form monomials of the algebra, in canonical order: paths at the
/// path level, pairs of paths with a common target at the Cohn level, and
/// those pairs not ending in the same special edge at the Leavitt level.
pub fn acyclic_basis(alg: &Algebra) -> Result<Vec<Monomial>, AlgebraError> {
    let g = &*alg.graph;
    if let Some(id) = g.infinite_families().next() {
        return Err(AlgebraError::InfiniteFamily(g.family(id).name.clone()));
    }
    if !g.is_acyclic() {
        return Err(AlgebraError::Cyclic);
    }
    let max_len = g.vertex_count();
    let mut paths: Vec<Path> = g.vertices().flat_map(|v| g.paths_from(v, max_len)).collect();
    paths.sort();
    let mut out: Vec<Monomial> = match alg.level {
        Level::Path => paths.into_iter().map(Monomial::path).collect(),
        Level::Cohn | Level::Leavitt => {
            let mut pairs = Vec::new();
            for x in &paths {
                for y in paths.iter().filter(|y| y.target() == x.target()) {
                    let m = Monomial {
                        real: x.clone(),
                        ghost: y.clone(),
                    };
                    if alg.is_normal(&m) {
                        pairs.push(m);
                    }
                }
            }
            pairs
        }
    };
    out.sort();
    Ok(out)
}
