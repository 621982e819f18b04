use crate::preprocessor::Universe;

/// Upper bound on the number of facts a saturation over `u` can produce.
///
/// Sum over shapes: `|S|² + |S|³ + |S||R|² + |S||R|³ + |S|²|C|³ + |S|²|C| + 2|S||C|²|R| + |S||C|³ + |S||R||I|²`.
pub fn polynomial_bound(u: &Universe) -> u128 {
    let s = u.num_standpoints() as u128;
    let c = u.num_concepts() as u128;
    let r = u.num_roles() as u128;
    let i = u.num_individuals() as u128;
    s * s
        + s * s * s
        + s * r * r
        + s * r * r * r
        + s * s * c * c * c
        + s * s * c
        + s * c * c * r
        + s * c * c * r
        + s * c * c * c
        + s * r * i * i
}
