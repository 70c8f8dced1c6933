#pragma once

#include "ccva/sigmoid.hpp"
#include "ccva/termstructures.hpp"

namespace ccva {

/// A traded CDS level: flat spread quoted to `maturity` with the given
/// recovery assumption.
struct CdsQuote {
    double maturity = 10.0;   // years
    double spread = 0.0100;   // rate/yr, e.g. 0.0100 for 100bps
    double recovery = 0.40;   // fraction in [0, 1)

    void validate() const;
};

/// Spread extrapolation policy beyond the last traded maturity. Only the
/// flat-spread policy is shipped; the enum is the extension point.
enum class ExtrapolationPolicy { FlatSpread };

/// Par CDS spread under continuous premium and protection conventions:
///   s = (1 - R) * integral D(t) lambda(t) S(t) dt / integral D(t) S(t) dt
/// over [0, maturity]. Quadrature is refined at hazard-curve nodes.
/// Throws std::domain_error if the premium annuity degenerates to zero.
double par_spread(const HazardCurve& hazard, const DiscountCurve& discount,
                  double maturity, double recovery);

/// Flat hazard implied by a flat quote under continuous conventions:
/// lambda = spread / (1 - recovery). Valid on [0, maturity]; the curve
/// extrapolates flat, which is exactly the Xi extension.
HazardCurve bootstrap_flat_hazard(const CdsQuote& quote);

/// Market-practice curve: the quoted spread extrapolated flat for all t.
HazardCurve extend_curve_xi(const CdsQuote& quote,
                            ExtrapolationPolicy policy = ExtrapolationPolicy::FlatSpread);

/// Concatenate the flat bootstrapped segment on [0, quote.maturity] with an
/// arbitrary stressed tail whose first node sits at quote.maturity. A level
/// mismatch at the switch becomes a jump node.
HazardCurve extend_curve(const CdsQuote& quote, const HazardCurve& stressed_tail);

/// Full climate-stressed curve: flat bootstrapped segment to quote.maturity,
/// then the sigmoid segment (endpoint or transient per params.transient).
/// params.t_start must equal quote.maturity; unset h_start defaults to the
/// bootstrapped flat level.
HazardCurve extend_curve_p(const CdsQuote& quote, const SigmoidParams& params);

}  // namespace ccva
