// Generated by tests/gen_fixtures.py (mpmath, 60 significant digits).
// Closed forms were cross-checked against independent numeric integrals
// before freezing. Do not edit by hand; regenerate instead.
#pragma once

namespace fixtures {

struct XY { double x; double y; };

// x, Q(x)
inline constexpr XY q_values[] = {
    {-8.000000000000000000000, 0.9999999999999993779039},
    {-5.000000000000000000000, 0.9999997133484281208061},
    {-2.000000000000000000000, 0.9772498680518207927997},
    {-1.000000000000000000000, 0.8413447460685429485852},
    {-0.5000000000000000000000, 0.6914624612740131036377},
    {0.0, 0.5000000000000000000000},
    {0.3000000000000000000000, 0.3820885778110473626935},
    {0.5000000000000000000000, 0.3085375387259868963623},
    {0.6745000000000000000000, 0.2499967428636991652235},
    {0.6744897501960817000000, 0.2500000000000000137287},
    {1.000000000000000000000, 0.1586552539314570514148},
    {2.000000000000000000000, 0.02275013194817920720028},
    {5.000000000000000000000, 2.866515718791939116738e-7},
    {8.000000000000000000000, 6.220960574271784123516e-16},
    {10.00000000000000000000, 7.619853024160526065973e-24},
    {20.00000000000000000000, 2.753624118606233695076e-89},
    {37.00000000000000000000, 5.725571222524576822683e-300},
};

// x, ln Q(x)
inline constexpr XY log_q_values[] = {
    {-37.00000000000000000000, -5.725571222524576822683e-300},
    {-30.00000000000000000000, -4.906713927148187059534e-198},
    {-20.00000000000000000000, -2.753624118606233695076e-89},
    {-10.00000000000000000000, -7.619853024160526065973e-24},
    {-8.000000000000000000000, -6.220960574271786058534e-16},
    {-5.000000000000000000000, -2.866516129637635933846e-7},
    {-2.000000000000000000000, -0.02301290932896348846534},
    {-1.000000000000000000000, -0.1727537790234498895265},
    {0.0, -0.6931471805599453094172},
    {1.000000000000000000000, -1.841021645009263505771},
    {2.000000000000000000000, -3.783184333682031948836},
    {5.000000000000000000000, -15.06499839398872573608},
    {8.000000000000000000000, -35.01343715991454989550},
    {10.00000000000000000000, -53.23128515051247057835},
    {20.00000000000000000000, -203.9171553710972639368},
    {30.00000000000000000000, -454.3212439563431971074},
    {40.00000000000000000000, -804.6084420137537881666},
    {60.00000000000000000000, -1805.013560680567138701},
    {123.0000000000000000000, -7570.231188975880170656},
};

// Q^{-1}(0.25)
inline constexpr double inverse_q_quarter = 0.6744897501960817432022;

// ln(Q(10) - Q(11)) and ln(Q(10) - Q(10 + 1e-6))
inline constexpr double log_q_diff_10_11 = -53.23131022558312486042;
inline constexpr double log_q_diff_tight = -64.73445409116494684547;

// m, sigma2, V(m, sigma2); closed form verified against the
// second-moment integral at 60 digits.
struct VarFix { double m; double sigma2; double v; };
inline constexpr VarFix variances[] = {
    {3.000000000000000000000, 40.00000000000000000000, 27.70467832633460536241},
    {2.000000000000000000000, 20.00000000000000000000, 14.13721790877844416589},
    {15.00000000000000000000, 630.0000000000000000000, 398.2174735330151445315},
    {0.01000000000000000000000, 1.000000000000000000000, 0.9920573835992292077662},
    {1.000000000000000000000, 1.000000000000000000000, 0.4748647238390187909109},
    {0.5000000000000000000000, 4.000000000000000000000, 3.286446020583596093132},
};

// OSGT(m=3, sigma2=40) spot values
inline constexpr double pdf_340_at0 = 0.08873050697360581098996;
inline constexpr double cdf_340_at5 = 0.8379368988316487263701;
inline constexpr double cdf_340_atm5 = 0.1620631011683512736299;

// m, sigma2, Delta, eps, delta (exact closed form; verified against the
// positive-part integral at 60 digits)
struct DeltaFix { double m; double sigma2; double delta_q; double eps; double delta; };
inline constexpr DeltaFix osgt_deltas[] = {
    {3.000000000000000000000, 40.00000000000000000000, 1.000000000000000000000, 0.2000000000000000000000, 0.01345852317376910183661},
    {3.000000000000000000000, 40.00000000000000000000, 1.000000000000000000000, 0.5000000000000000000000, 0.00006786595050640430174937},
    {3.000000000000000000000, 40.00000000000000000000, 1.000000000000000000000, 1.000000000000000000000, 7.847361017748770736704e-12},
    {3.000000000000000000000, 40.00000000000000000000, 1.000000000000000000000, 0.08750000000000000000000, 0.04720047978920979606088},
    {2.000000000000000000000, 20.00000000000000000000, 1.000000000000000000000, 0.2000000000000000000000, 0.03815021842122681135010},
    {2.000000000000000000000, 20.00000000000000000000, 1.000000000000000000000, 0.5000000000000000000000, 0.001923303169414308149304},
    {2.000000000000000000000, 20.00000000000000000000, 1.000000000000000000000, 1.000000000000000000000, 4.452768886194740971783e-7},
    {2.000000000000000000000, 20.00000000000000000000, 1.000000000000000000000, 0.1250000000000000000000, 0.06529559130698070579921},
    {15.00000000000000000000, 630.0000000000000000000, 1.000000000000000000000, 0.2000000000000000000000, 3.843444590967992183322e-9},
    {15.00000000000000000000, 630.0000000000000000000, 1.000000000000000000000, 0.5000000000000000000000, 1.456203445709023579215e-38},
    {15.00000000000000000000, 630.0000000000000000000, 1.000000000000000000000, 1.000000000000000000000, 1.184956913981502772540e-141},
    {15.00000000000000000000, 630.0000000000000000000, 1.000000000000000000000, 0.02460317460317460317460, 0.01201722216913342397811},
    {0.01000000000000000000000, 1.000000000000000000000, 1.000000000000000000000, 0.2000000000000000000000, 0.3245990943131658132775},
    {0.01000000000000000000000, 1.000000000000000000000, 1.000000000000000000000, 0.5000000000000000000000, 0.2403389121576156964885},
    {0.01000000000000000000000, 1.000000000000000000000, 1.000000000000000000000, 1.000000000000000000000, 0.1279576750243720604497},
    {0.01000000000000000000000, 1.000000000000000000000, 1.000000000000000000000, 0.5100000000000000000000, 0.2377094314431934475355},
};

// Gaussian mechanism at sigma_g2 = V(3,40), Delta2 = 1, eps = 1
inline constexpr double gauss_delta_v340 = 3.928505932919625572521e-9;
inline constexpr double gauss_delta_unit_eps2 = 0.02092363582111373141960;

inline constexpr double osgt_delta_340_eps1 = 7.847361017748770736704e-12;

// epsilon solving delta = 1e-10 at (m=3, sigma2=40, Delta=1) and for the
// matched-variance Gaussian
inline constexpr double eps_for_1em10_osgt = 0.9366257564985841236394;
inline constexpr double eps_for_1em10_gauss = 1.119945338753671355352;

// m, sigma2, Delta_qq, alpha, tau (closed form; verified against the
// numeric Renyi integral at 60 digits)
struct RenyiFix { double m; double sigma2; double delta_qq; double alpha; double tau; };
inline constexpr RenyiFix renyi_values[] = {
    {3.000000000000000000000, 40.00000000000000000000, 1.000000000000000000000, 1.500000000000000000000, 0.02840325187001452463045},
    {3.000000000000000000000, 40.00000000000000000000, 1.000000000000000000000, 2.000000000000000000000, 0.03773070112074681316709},
    {3.000000000000000000000, 40.00000000000000000000, 1.000000000000000000000, 5.000000000000000000000, 0.08994635440931003398180},
    {3.000000000000000000000, 40.00000000000000000000, 1.000000000000000000000, 10.00000000000000000000, 0.1597064112137283988188},
    {3.000000000000000000000, 40.00000000000000000000, 1.000000000000000000000, 50.00000000000000000000, 0.6342597295056432527756},
    {3.000000000000000000000, 40.00000000000000000000, 0.5000000000000000000000, 2.000000000000000000000, 0.009519797999161588442299},
    {2.000000000000000000000, 20.00000000000000000000, 1.000000000000000000000, 2.000000000000000000000, 0.07296821443908850523641},
    {0.01000000000000000000000, 1.000000000000000000000, 2.000000000000000000000, 50.00000000000000000000, 100.0001634839364168324},
    {15.00000000000000000000, 630.0000000000000000000, 1.000000000000000000000, 10.00000000000000000000, 0.01333696099879118205644},
    {15.00000000000000000000, 630.0000000000000000000, 1.000000000000000000000, 100.0000000000000000000, 0.08539806151990203795244},
};

// Renyi->approximate-DP conversion, k=8, m=15, sigma2=630, Delta2^2=8,
// per-coordinate Delta=1, eps=0.9; sigma_g2 = V(15,630) for the Gaussian
inline constexpr double convert_delta_osgt_09 = 1.228721347992664031106e-14;
inline constexpr double convert_alpha_osgt_09 = 71.66483071575934675566;
inline constexpr double convert_delta_gauss_09 = 2.229736346028713475568e-11;
inline constexpr double convert_alpha_gauss_09 = 46.38434887096123132765;

// Kolmogorov statistic critical value scale at the 1% level:
// P(sqrt(n) D > c) ~ 2 exp(-2 c^2) = 0.01
inline constexpr double ks_critical_1pct_scale = 1.627623630718729255058;

}  // namespace fixtures
