// Generated by tests/oracles/gen_oracles.py (mpmath, 50 digits). Do not edit.
#pragma once
#include <array>
#include <utility>

namespace radonfd::oracle {

inline constexpr std::array<std::pair<double, double>, 100> kLogGamma{{
    {0.001, 6.9071788853838534},
    {0.0012663801734674033, 6.6708630490606096},
    {0.0016037187437513303, 6.4345065537837476},
    {0.0020309176209047358, 6.1980986696133487},
    {0.002571913809059345, 5.9616258690823578},
    {0.0032570206556597832, 5.7250711185042187},
    {0.0041246263829013514, 5.488413002396979},
    {0.0052233450742668417, 5.2516246496405579},
    {0.0066147406412301497, 5.014672429363177},
    {0.0083767764006829198, 4.7775143882853346},
    {0.010608183551394484, 4.5400984130676045},
    {0.013433993325989001, 4.3023601272394165},
    {0.01701254279852589, 4.0642205823868141},
    {0.021544346900318836, 3.8255838930082184},
    {0.027283333764867679, 3.5863351179020522},
    {0.03455107294592219, 3.3463389446543159},
    {0.043754793750741851, 3.1054401417721684},
    {0.055410203300094919, 2.8634673828082073},
    {0.070170382867038278, 2.6202430256243736},
    {0.088862381627434039, 2.3756028888088059},
    {0.11253355826007651, 2.1294321799852467},
    {0.14251026703029981, 1.8817266927005301},
    {0.18047217668271703, 1.6326923914369862},
    {0.22854638641349903, 1.3829016988650704},
    {0.28942661247167512, 1.1335312631029011},
    {0.36652412370796278, 0.8867137314726462},
    {0.46415888336127786, 0.64604516042396853},
    {0.58780160722749131, 0.41730053020400959},
    {0.74438030132516886, 0.20942345762011852},
    {0.94266845511788522, 0.035874602292681843},
    {1.1937766417144364, -0.083550688709821089},
    {1.5117750706156623, -0.1202879837818786},
    {1.9144819761699581, -0.033754112933572333},
    {2.4244620170823286, 0.23298410201582487},
    {3.0702906297578494, 0.75897711101746468},
    {3.8881551803080883, 1.6530633851807901},
    {4.9238826317067392, 3.0640568899301863},
    {6.2355073412739142, 5.1942534952013864},
    {7.8965228684997264, 8.3173046373065507},
    {10, 12.801827480081469},
    {12.796666666666667, 19.475257433624034},
    {15.963333333333333, 27.798810950159456},
    {19.129999999999999, 36.775226802054704},
    {22.296666666666667, 46.292391723635539},
    {25.463333333333335, 56.271166651503314},
    {28.629999999999999, 66.652671615175308},
    {31.796666666666667, 77.391375170978037},
    {34.963333333333331, 88.451010573837721},
    {38.130000000000003, 99.80200568754195},
    {41.296666666666667, 111.41978402781928},
    {44.463333333333331, 123.28359635682442},
    {47.630000000000003, 135.37569056721901},
    {50.796666666666667, 147.68070560619535},
    {53.963333333333331, 160.18521858965914},
    {57.130000000000003, 172.87739955790167},
    {60.296666666666667, 185.74674367130072},
    {63.463333333333331, 198.78386027709163},
    {66.629999999999995, 211.9803045060612},
    {69.796666666666667, 225.32844119083913},
    {72.963333333333338, 238.82133370403028},
    {76.129999999999995, 252.45265225997269},
    {79.296666666666667, 266.21659759771552},
    {82.463333333333338, 280.10783694921292},
    {85.629999999999995, 294.12144991577605},
    {88.796666666666667, 308.25288240725592},
    {91.963333333333338, 322.4979071961979},
    {95.129999999999995, 336.85258994040555},
    {98.296666666666667, 351.31325975788201},
    {101.46333333333334, 365.87648361631113},
    {104.63, 380.53904393826582},
    {107.79666666666667, 395.29791893271187},
    {110.96333333333334, 410.1502652501386},
    {114.13, 425.09340262797667},
    {117.29666666666667, 440.12480024875373},
    {120.46333333333334, 455.24206457862823},
    {123.63, 470.44292849077573},
    {126.79666666666667, 485.72524150829707},
    {129.96333333333334, 501.0869610262074},
    {133.13, 516.5261443926928},
    {136.29666666666665, 532.04094174699651},
    {139.46333333333334, 547.62958952566532},
    {142.63, 563.29040456096436},
    {145.79666666666665, 579.02177870545984},
    {148.96333333333334, 594.82217392540485},
    {152.13, 610.69011781290612},
    {155.29666666666665, 626.62419947312651},
    {158.46333333333334, 642.62306574814431},
    {161.63, 658.68541774371147},
    {164.79666666666665, 674.81000762913629},
    {167.96333333333334, 690.99563568395854},
    {171.13, 707.24114756807478},
    {174.29666666666665, 723.54543179457357},
    {177.46333333333334, 739.90741738680583},
    {180.63, 756.32607170320011},
    {183.79666666666665, 772.80039841507698},
    {186.96333333333334, 789.32943562423827},
    {190.13, 805.91225410846164},
    {193.29666666666665, 822.54795568421764},
    {196.46333333333334, 839.235671676979},
    {199.63, 855.97456149042603},
}};

inline constexpr double kLogGamma3p7 = 1.4280723266653879;
inline constexpr double kRecipGammaNeg2p3 = -0.69103371592830976;
inline constexpr double kRecipGammaNeg0p3 = -0.2311149551599698;

// {n, q, closed form of the un-normalized ball derivative}
inline constexpr std::array<std::array<double, 3>, 11> kBallDerivative{{
    {3, 0, 3.1415926535897931},
    {3, 0.5, 2.3632718012073548},
    {3, 1.5, -3.5449077018110322},
    {4, 0, 4.1887902047863914},
    {4, 0.5, 3.3978372367711027},
    {4, 1.5, -6.1966346792012894},
    {4, 2.5, -12.741889637891635},
    {5, 0, 4.934802200544679},
    {5, 0.5, 4.2425356166336821},
    {5, 1.5, -8.9093247949307326},
    {5, 2.5, -22.273311987326831},
}};
// {n, q, normalized derivative of the volume-one ball (continuous at odd q)}
inline constexpr std::array<std::array<double, 3>, 19> kVolumeOneBall{{
    {3, 0, 1.2089939655123523},
    {3, 0.5, 1.6329931618554521},
    {3, 1, 2.4814019635975999},
    {3, 1.5, 3.9485577568123547},
    {4, 0, 1.265133328876785},
    {4, 0.5, 1.7718378535128583},
    {4, 1, 2.8284271247461903},
    {4, 1.5, 4.8160915607571457},
    {4, 2.5, 14.760127816041415},
    {5, 0, 1.306865734441939},
    {5, 0.5, 1.8759945115691086},
    {5, 1, 3.0927122956933539},
    {5, 1.5, 5.4917473971826141},
    {5, 2.5, 19.138603988236436},
    {8, 0, 1.3868854238017814},
    {8, 0.5, 2.0779542580696662},
    {8, 1, 3.6144080144393795},
    {8, 1.5, 6.8601399036728985},
    {8, 2.5, 28.75660825641598},
}};
inline constexpr double kTheorem1Bound_n4_q1p5_c0p1 = 0.0013026597860473039;
inline constexpr double kKpz_n4_q3 = 1.6872612880196562;
inline constexpr double kKpz_n9_q1 = 17.150665190778991;
inline constexpr double kFourierConst_n3_lm1p3 = 14.533959771248506;
inline constexpr double kL3BallVolume3 = 5.6965835415098356;

}  // namespace radonfd::oracle
