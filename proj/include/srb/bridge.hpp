#pragma once

#include "srb/stable.hpp"

namespace srb {

/// Stable-1/2 bridge to a fixed terminal value z at time T. All closed forms
/// route their exp * Phi products through scaled_cdf_product: near the pinned
/// region the exponent is huge while the normal tail is tiny, and the naive
/// product is NaN.

/// Bridge density f_tT(y;z); zero outside 0 < y <= z. Requires 0 < t < T.
double bridge_density(const BridgeParams& p, double t, double y, double z);

/// log f_tT(y;z); -inf outside the support.
double bridge_log_density(const BridgeParams& p, double t, double y, double z);

/// Distribution function F_tT(y;z) with endpoint conventions F(0;z)=0,
/// F(z;z)=1 taken as continuous limits.
double bridge_cdf(const BridgeParams& p, double t, double y, double z);

/// Incomplete first moment M_tT(y;z) = int_0^y u f_tT(u;z) du, with
/// M(0;z)=0 and M(z;z)=(t/T)z.
double bridge_incomplete_first_moment(const BridgeParams& p, double t, double y, double z);

/// E[S_tT | S_sT = x] = ((T-t)x + (t-s)z)/(T-s).
double bridge_conditional_mean(const BridgeParams& p, double s, double t, double x, double z);

/// Second moment of the increment S_tT - x given S_sT = x (the closed form is
/// expressed in (z-x); it is the increment's moment, see the unit tests).
double bridge_conditional_second_moment(const BridgeParams& p, double s, double t, double x,
                                        double z);

/// Draw of the bridge at time (s+t)/2 given values y at s and z_val at t.
/// The value always lies in [y, z_val]; a flat segment returns y.
double bridge_midpoint_sample(const BridgeParams& p, double s, double t, double y, double z_val,
                              CounterRng& rng);

} // namespace srb
