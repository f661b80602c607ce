use super::{hypersurface, poly_region_count, TropicalHypersurface};
use crate::error::{check_dim, Error, Result};
use crate::rational::Rational;
use crate::tropical::TropicalPolynomial;

/// The level set `{f − g = c′}` seen through `T(c′ ⊙ g ⊕ f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionBoundary {
    /// `max{f, g + c′}`.
    pub combined: TropicalPolynomial,
    pub hypersurface: TropicalHypersurface,
    /// At most `N(f)` connected regions where `f − g > c′`.
    pub positive_bound: usize,
    /// At most `N(g)` connected regions where `f − g < c′`.
    pub negative_bound: usize,
    /// False when a monomial of `f` and one of `g` share an exponent and their
    /// coefficients differ by exactly `c′`; containment in the hypersurface is
    /// then not guaranteed.
    pub certified: bool,
}

/// Analyzes the decision boundary of `f ⊘ g` at threshold `c′`, which the
/// caller has already pulled back through the score function.
pub fn decision_boundary(
    f: &TropicalPolynomial,
    g: &TropicalPolynomial,
    c: &Rational,
) -> Result<DecisionBoundary> {
    check_dim(f.dim(), g.dim())?;
    if f.dim() != 2 {
        return Err(Error::NotPlanar(f.dim()));
    }
    if f.is_bottom() || g.is_bottom() {
        return Err(Error::EmptyPolynomial);
    }
    let certified = !f.terms().any(|(e, cf)| {
        g.coefficient(e).as_finite().is_some_and(|cg| &(cf - cg) == c)
    });
    let combined = f.add(&g.shift(c))?;
    Ok(DecisionBoundary {
        hypersurface: hypersurface(&combined)?,
        combined,
        positive_bound: poly_region_count(f)?,
        negative_bound: poly_region_count(g)?,
        certified,
    })
}
