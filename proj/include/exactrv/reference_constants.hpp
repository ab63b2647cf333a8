// Numeric reference table for the conformance harness.
//
// Generated by tools/gen_reference_constants.py (mpmath, 50 decimal
// digits); do not edit by hand. These values are computed independently
// of the samplers they validate.

#pragma once

namespace exactrv::ref {

inline constexpr double exp_neg_half = 0.60653065971263342;  // exp(-1/2)
inline constexpr double exp_neg_1 = 0.36787944117144232;  // exp(-1)
inline constexpr double exp_neg_2 = 0.13533528323661269;  // exp(-2)
inline constexpr double one_minus_exp_neg_1 = 0.63212055882855768;  // 1 - exp(-1)
inline constexpr double exp_neg_0_375 = 0.68728927879097220;  // exp(-3/8)
inline constexpr double e_minus_1 = 1.7182818284590452;  // e - 1
inline constexpr double geo_mean_half_exp = 1.5414940825367983;  // mean of Geometric(exp(-1/2))
inline constexpr double run_len_mean_at_1 = 1.7182818284590452;  // E[run length], x = 1
inline constexpr double run_len_var_at_1 = 0.76578938644648548;  // Var[run length], x = 1

inline constexpr double gauss_int_norm = 1.7533141440214528;  // sum_k exp(-k^2/2)
inline constexpr double gauss_int_pmf_0 = 0.57034844748720880;  // exp(-0^2/2) / norm
inline constexpr double gauss_int_pmf_1 = 0.34593382012049301;  // exp(-1^2/2) / norm
inline constexpr double gauss_int_pmf_2 = 0.077188268684243723;  // exp(-2^2/2) / norm
inline constexpr double gauss_int_pmf_3 = 0.0063359989287272765;  // exp(-3^2/2) / norm
inline constexpr double gauss_int_pmf_4 = 0.00019133058901417684;  // exp(-4^2/2) / norm
inline constexpr double gauss_int_pmf_5 = 2.1254908510183520e-6;  // exp(-5^2/2) / norm
inline constexpr double gauss_int_pmf_6 = 8.6863953026584842e-9;  // exp(-6^2/2) / norm
inline constexpr double gauss_int_tail_ge_3 = 0.0065294637080544659;  // P[k >= 3]

inline constexpr double half_gauss_norm = 1.2533141373155003;  // integral_0^inf exp(-t^2/2) dt
inline constexpr double half_gauss_k0 = 0.68268949213708590;  // P[k = 0] for the half-Gaussian
inline constexpr double std_normal_cdf_m2 = 0.022750131948179207;  // Phi(-2.0)
inline constexpr double std_normal_cdf_m1 = 0.15865525393145705;  // Phi(-1.0)
inline constexpr double std_normal_cdf_mhalf = 0.30853753872598690;  // Phi(-0.5)
inline constexpr double std_normal_cdf_zero = 0.50000000000000000;  // Phi(0.0)
inline constexpr double std_normal_cdf_phalf = 0.69146246127401310;  // Phi(0.5)
inline constexpr double std_normal_cdf_p1 = 0.84134474606854295;  // Phi(1.0)
inline constexpr double std_normal_cdf_p2 = 0.97724986805182079;  // Phi(2.0)

inline constexpr double laplace_cdf_e0_m1 = 0.18393972058572116;  // Laplace(rate 2^0) CDF at -1
inline constexpr double laplace_cdf_e0_zero = 0.50000000000000000;  // Laplace(rate 2^0) CDF at 0
inline constexpr double laplace_cdf_e0_p1 = 0.81606027941427884;  // Laplace(rate 2^0) CDF at 1
inline constexpr double laplace_cdf_e1_m1 = 0.067667641618306346;  // Laplace(rate 2^1) CDF at -1
inline constexpr double laplace_cdf_e1_zero = 0.50000000000000000;  // Laplace(rate 2^1) CDF at 0
inline constexpr double laplace_cdf_e1_p1 = 0.93233235838169365;  // Laplace(rate 2^1) CDF at 1

inline constexpr double thinned_pmf_k1_xhalf_0 = 0.68750000000000000;  // thinned-run PMF at n = 0
inline constexpr double thinned_pmf_k1_xhalf_1 = 0.26367187500000000;  // thinned-run PMF at n = 1
inline constexpr double thinned_pmf_k1_xhalf_2 = 0.043741861979166667;  // thinned-run PMF at n = 2

// Chi-square upper critical values, alpha = 0.001, by degrees of
// freedom (index 0 unused).
inline constexpr double chi2_crit_001[17] = {0.0, 10.82756617, 13.81551056, 16.2662362, 18.46682695, 20.51500565, 22.45774448, 24.32188635, 26.12448156, 27.87716487, 29.58829845, 31.26413362, 32.90949041, 34.52817897, 36.12327368, 37.69729822, 39.25235479};

}  // namespace exactrv::ref
