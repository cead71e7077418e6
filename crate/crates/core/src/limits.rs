/// Resource caps shared by the whole toolkit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest lattice any constructor will build.
    pub max_elements: usize,
    /// Largest host for congruence-lattice enumeration.
    pub max_congruence_host: usize,
    /// Largest lattice on either side of an isomorphism check.
    pub max_isomorphism: usize,
    /// Largest unary-polynomial closure.
    pub max_functions: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_elements: 200_000,
            max_congruence_host: 3_000,
            max_isomorphism: 512,
            max_functions: 100_000,
        }
    }
}
