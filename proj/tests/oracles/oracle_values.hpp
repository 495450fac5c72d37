// Generated by generate.py (mpmath, 60 digits). Do not edit by hand.
#ifndef SU11G_TESTS_ORACLE_VALUES_HPP
#define SU11G_TESTS_ORACLE_VALUES_HPP

namespace oracle {

struct LnGamma { double re, im, out_re, out_im; };
inline constexpr LnGamma kLnGamma[] = {
    {2.0, 3.0, -2.0928517530927333496, 2.3023965434668676262},
    {-2.5, 1.5, -3.7175134511917918462, -7.713065525834192526},
    {0.3, -7.0, -10.465674446702918896, -6.3103096470407681554},
    {30.0, 0.5, 71.252802287360528128, 1.6922429968902724304},
    {-0.3, -4.0, -6.4765289936352027889, -0.21911147775053550158},
    {-7.2, 0.01, -7.2562258955591480197, -25.069122814607116662},
    {-7.2, -0.01, -7.2562258955591480197, 25.069122814607116662},
    {0.2, 30.0, -47.225301594789440631, 71.564571416837276553},
    {-40.5, 3.0, -119.65162498648432014, -117.66183595098323499},
    {0.5, 0.0, 0.57236494292470008707, 0.0},
    {0.001, 0.001, 6.5606044738375526187, -0.78597373492965343485},
    {3.7, -120.0, -172.25627717969420947, -459.48324274515952896},
    {-12.25, 60.0, -145.62627739321112179, 164.28901312896481514},
};

struct Cdh { int n; double x2, a, b, c, value; };
inline constexpr Cdh kCdh[] = {
    {0, 1.3, 1, 0, 1, 1.0},
    {1, 0.49, 1, 0, 1, 0.51000000000000000888},
    {3, 2.25, 0.7, 0.0, 1.6, -74.348936999999986815},
    {5, 6.25, 1.2, 1.0, 0.4, 94260.034480874302388},
    {8, 0.01, 2.0, 0.5, 2.5, 1270449388940.7664496},
    {12, 16.0, 0.6, 1.0, 0.6, 8474111115824168051.5},
    {4, -0.25, 1.0, 0.5, 1.5, 7087.5},
    {20, 9.0, 1.5, 0.0, 3.0, -4219419290036711573300000000000000000000.0},
};

struct Mp { int n; double x, a, value; };
inline constexpr Mp kMp[] = {
    {0, 0.4, 1.0, 1.0},
    {1, 0.4, 1.0, 0.80000000000000004441},
    {2, -1.1, 0.7, 1.7200000000000004352},
    {5, 2.3, 2.0, -13.717751999999996725},
    {9, 0.35, 0.5, 0.33373985542440199849},
    {14, -3.0, 1.25, 27.333294202607578898},
};

struct Wave { int n; double x, a, c, value; };
inline constexpr Wave kPsi[] = {
    {0, 0.0, 1.0, 1.0, 0.56418958354775628695},
    {0, 1.5, 1.0, 2.0, 0.45433707972228190057},
    {1, 0.8, 0.6, 0.6, 0.62608258722877409975},
    {2, -2.1, 2.0, 0.5, 0.438411818531515137},
    {3, 3.3, 0.5, 0.5, 0.33637501037519847609},
    {6, 1.1, 1.3, 0.8, 0.238719135365537384},
    {9, -4.2, 0.3, 1.7, 0.016650812307905913021},
    {16, 2.0, 1.0, 2.0, 0.095093867119603566324},
    {25, 5.5, 0.9, 1.4, -0.051177474311101011858},
    {30, -7.0, 2.5, 3.5, 0.11848094666665272179},
};

struct Weight { double x, a, c, value; };
inline constexpr Weight kWeight[] = {
    {0.0, 0.5, 0.5, 3.1415926535897932385},
    {0.7, 1.0, 2.0, 0.52790613896047579675},
    {-3.0, 0.3, 1.2, 0.0015331060298550694698},
    {12.0, 2.0, 2.0, 0.00000000080679299506804668043},
};

struct Phi { int n; double x, a, value; };
inline constexpr Phi kPhi[] = {
    {0, 0.0, 1.0, 0.79788456080286535588},
    {1, 0.9, 1.0, 0.58843817876487655135},
    {4, -1.7, 0.7, -0.15886255741448150252},
    {7, 2.2, 2.0, 0.26635168605140918414},
    {10, 0.3, 1.5, -0.14164238460947445921},
};
inline constexpr Phi kParaboson[] = {
    {0, 0.5, 0.5, 0.662865966442479529},
    {1, 1.2, 0.5, 0.6204642291744918814},
    {2, 0.8, 1.0, -0.23381547965176140575},
    {3, 1.9, 2.0, 0.20381524831489288066},
    {6, 0.35, 1.5, -0.39663218429966864836},
    {5, -1.4, 0.75, 0.40852758407954472295},
};

struct Generating { double x, z, a, c; bool odd; double value; };
inline constexpr Generating kGenerating[] = {
    {0.7, 0.5, 1.3, 0.8, false, 0.49957686440771904684},
    {0.7, 0.9, 1.3, 0.8, true, 0.18771045737104585922},
    {-1.3, -0.9, 0.6, 2.0, true, 0.15368796635896132443},
    {2.4, 0.9, 2.0, 0.5, false, 0.78062618769804690226},
};

// Ascending eigenvalues of the 4 x 4 truncated position operator, (a, c) = (0.75, 1.5).
inline constexpr double kQEigen[] = {-2.6555726796276370424, -0.83542428933763434981, 0.83542428933763434981, 2.6555726796276370424};

}  // namespace oracle

#endif  // SU11G_TESTS_ORACLE_VALUES_HPP
