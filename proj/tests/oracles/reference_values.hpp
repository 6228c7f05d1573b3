// Generated by gen_reference.py (mpmath, 40 digits). Do not edit by hand.
#pragma once

namespace sovc_test_ref {

struct LnGammaPoint {
    double re, im;      // argument
    double lg_re, lg_im; // principal log Gamma
};

inline constexpr LnGammaPoint lngamma_grid[] = {
    {-9.73, -9.31, -38.09720382920554007, 9.435801373255534787},
    {-9.73, -7.2411111111111115, -33.00223486623899095, 14.76797443854798907},
    {-9.73, -5.1722222222222225, -27.62806669116499258, 19.90450571167200391},
    {-9.73, -3.1033333333333335, -21.92107113283305540, 24.87476767823336535},
    {-9.73, -1.0344444444444445, -15.83288287352267152, 29.72941735602565978},
    {-9.73, 1.0344444444444445, -15.83288287352267152, -29.72941735602565978},
    {-9.73, 3.1033333333333335, -21.92107113283305540, -24.87476767823336535},
    {-9.73, 5.1722222222222225, -27.62806669116499258, -19.90450571167200391},
    {-9.73, 7.2411111111111115, -33.00223486623899095, -14.76797443854798907},
    {-9.73, 9.31, -38.09720382920554007, -9.435801373255534787},
    {-8.705789473684211, -9.31, -35.43470539293648165, 7.000621407818161258},
    {-8.705789473684211, -7.2411111111111115, -30.44706116251332426, 12.20621779205752063},
    {-8.705789473684211, -5.1722222222222225, -25.17132595462474411, 17.18781251474208208},
    {-8.705789473684211, -3.1033333333333335, -19.54233498477059198, 21.97371674511878425},
    {-8.705789473684211, -1.0344444444444445, -13.49833501303336794, 26.62043132066375246},
    {-8.705789473684211, 1.0344444444444445, -13.49833501303336794, -26.62043132066375246},
    {-8.705789473684211, 3.1033333333333335, -19.54233498477059198, -21.97371674511878425},
    {-8.705789473684211, 5.1722222222222225, -25.17132595462474411, -17.18781251474208208},
    {-8.705789473684211, 7.2411111111111115, -30.44706116251332426, -12.20621779205752063},
    {-8.705789473684211, 9.31, -35.43470539293648165, -7.000621407818161258},
    {-7.681578947368422, -9.31, -32.82851027120851856, 4.622442935397453646},
    {-7.681578947368422, -7.2411111111111115, -27.96225854332123074, 9.699887705457241351},
    {-7.681578947368422, -5.1722222222222225, -22.80119851215609794, 14.51986251251878311},
    {-7.681578947368422, -3.1033333333333335, -17.26598029812608323, 19.10724636067786854},
    {-7.681578947368422, -1.0344444444444445, -11.27642165998890769, 23.52416339790954290},
    {-7.681578947368422, 1.0344444444444445, -11.27642165998890769, -23.52416339790954290},
    {-7.681578947368422, 3.1033333333333335, -17.26598029812608323, -19.10724636067786854},
    {-7.681578947368422, 5.1722222222222225, -22.80119851215609794, -14.51986251251878311},
    {-7.681578947368422, 7.2411111111111115, -27.96225854332123074, -9.699887705457241351},
    {-7.681578947368422, 9.31, -32.82851027120851856, -4.622442935397453646},
    {-6.657368421052632, -9.31, -30.27814396005663721, 2.307869022088248065},
    {-6.657368421052632, -7.2411111111111115, -25.54931155138825582, 7.257251067288327675},
    {-6.657368421052632, -5.1722222222222225, -20.52266373161834306, 11.90992875290754200},
    {-6.657368421052632, -3.1033333333333335, -15.10178112656739660, 16.28341933566539352},
    {-6.657368421052632, -1.0344444444444445, -9.180851537230293022, 20.44394625654109673},
    {-6.657368421052632, 1.0344444444444445, -9.180851537230293022, -20.44394625654109673},
    {-6.657368421052632, 3.1033333333333335, -15.10178112656739660, -16.28341933566539352},
    {-6.657368421052632, 5.1722222222222225, -20.52266373161834306, -11.90992875290754200},
    {-6.657368421052632, 7.2411111111111115, -25.54931155138825582, -7.257251067288327675},
    {-6.657368421052632, 9.31, -30.27814396005663721, -2.307869022088248065},
    {-5.633157894736843, -9.31, -27.78216755506376337, 0.06413710325053446683},
    {-5.633157894736843, -7.2411111111111115, -23.20872827244479971, 4.887954168679380395},
    {-5.633157894736843, -5.1722222222222225, -18.34036961810607206, 9.369706140340174635},
    {-5.633157894736843, -3.1033333333333335, -13.06101986882038190, 13.51327468508805234},
    {-5.633157894736843, -1.0344444444444445, -7.229057913902214160, 17.38461366720188048},
    {-5.633157894736843, 1.0344444444444445, -7.229057913902214160, -17.38461366720188048},
    {-5.633157894736843, 3.1033333333333335, -13.06101986882038190, -13.51327468508805234},
    {-5.633157894736843, 5.1722222222222225, -18.34036961810607206, -9.369706140340174635},
    {-5.633157894736843, 7.2411111111111115, -23.20872827244479971, -4.887954168679380395},
    {-5.633157894736843, 9.31, -27.78216755506376337, -0.06413710325053446683},
    {-4.608947368421053, -9.31, -25.33788609510381827, -2.101007446010588458},
    {-4.608947368421053, -7.2411111111111115, -20.93949513129186273, 2.603068112898978596},
    {-4.608947368421053, -5.1722222222222225, -16.25793395253964812, 6.913936133082016964},
    {-4.608947368421053, -3.1033333333333335, -11.15648076467767456, 10.81232544857332355},
    {-4.608947368421053, -1.0344444444444445, -5.443899608357622181, 14.35354987884014152},
    {-4.608947368421053, 1.0344444444444445, -5.443899608357622181, -14.35354987884014152},
    {-4.608947368421053, 3.1033333333333335, -11.15648076467767456, -10.81232544857332355},
    {-4.608947368421053, 5.1722222222222225, -16.25793395253964812, -6.913936133082016964},
    {-4.608947368421053, 7.2411111111111115, -20.93949513129186273, -2.603068112898978596},
    {-4.608947368421053, 9.31, -25.33788609510381827, 2.101007446010588458},
    {-3.584736842105263, -9.31, -22.94104595823781007, -4.179559695486951196},
    {-3.584736842105263, -7.2411111111111115, -18.73837035636955941, 0.4149397715274137104},
    {-3.584736842105263, -5.1722222222222225, -14.27671798952523408, 4.560994856229823422},
    {-3.584736842105263, -3.1033333333333335, -9.401896302844241296, 8.202931910265916251},
    {-3.584736842105263, -1.0344444444444445, -3.856517410612580859, 11.36283053415129613},
    {-3.584736842105263, 1.0344444444444445, -3.856517410612580859, -11.36283053415129613},
    {-3.584736842105263, 3.1033333333333335, -9.401896302844241296, -8.202931910265916251},
    {-3.584736842105263, 5.1722222222222225, -14.27671798952523408, -4.560994856229823422},
    {-3.584736842105263, 7.2411111111111115, -18.73837035636955941, -0.4149397715274137104},
    {-3.584736842105263, 9.31, -22.94104595823781007, 4.179559695486951196},
    {-2.560526315789474, -9.31, -20.58557533136089973, -6.163654942758790823},
    {-2.560526315789474, -7.2411111111111115, -16.59907239777644789, -1.663296436281706294},
    {-2.560526315789474, -5.1722222222222225, -12.39384449057737741, 2.333103216937199792},
    {-2.560526315789474, -3.1033333333333335, -7.809871902970158928, 5.717904699169972507},
    {-2.560526315789474, -1.0344444444444445, -2.511386899213731159, 8.434126012674385126},
    {-2.560526315789474, 1.0344444444444445, -2.511386899213731159, -8.434126012674385126},
    {-2.560526315789474, 3.1033333333333335, -7.809871902970158928, -5.717904699169972507},
    {-2.560526315789474, 5.1722222222222225, -12.39384449057737741, -2.333103216937199792},
    {-2.560526315789474, 7.2411111111111115, -16.59907239777644789, 1.663296436281706294},
    {-2.560526315789474, 9.31, -20.58557533136089973, 6.163654942758790823},
    {-1.5363157894736847, -9.31, -18.26344967212155128, -8.046122897047209417},
    {-1.5363157894736847, -7.2411111111111115, -14.51154043896991087, -3.618693271445725540},
    {-1.5363157894736847, -5.1722222222222225, -10.59941780922993437, 0.2554425158445740692},
    {-1.5363157894736847, -3.1033333333333335, -6.386000799387904124, 3.405032877948720193},
    {-1.5363157894736847, -1.0344444444444445, -1.475423785860575180, 5.611812161969504348},
    {-1.5363157894736847, 1.0344444444444445, -1.475423785860575180, -5.611812161969504348},
    {-1.5363157894736847, 3.1033333333333335, -6.386000799387904124, -3.405032877948720193},
    {-1.5363157894736847, 5.1722222222222225, -10.59941780922993437, -0.2554425158445740692},
    {-1.5363157894736847, 7.2411111111111115, -14.51154043896991087, 3.618693271445725540},
    {-1.5363157894736847, 9.31, -18.26344967212155128, 8.046122897047209417},
    {-0.5121052631578955, -9.31, -15.96477699597199651, -9.821148270122162082},
    {-0.5121052631578955, -7.2411111111111115, -12.46159747368173376, -5.439992093755588879},
    {-0.5121052631578955, -5.1722222222222225, -8.873622889030009793, -1.646862262484721780},
    {-0.5121052631578955, -3.1033333333333335, -5.115331805445089145, 1.328748652897219574},
    {-0.5121052631578955, -1.0344444444444445, -0.8500059410434392197, 3.005652254849201555},
    {-0.5121052631578955, 1.0344444444444445, -0.8500059410434392197, -3.005652254849201555},
    {-0.5121052631578955, 3.1033333333333335, -5.115331805445089145, -1.328748652897219574},
    {-0.5121052631578955, 5.1722222222222225, -8.873622889030009793, 1.646862262484721780},
    {-0.5121052631578955, 7.2411111111111115, -12.46159747368173376, 5.439992093755588879},
    {-0.5121052631578955, 9.31, -15.96477699597199651, 9.821148270122162082},
    {0.5121052631578937, -9.31, -13.67817317628229557, -11.48492496281874815},
    {0.5121052631578937, -7.2411111111111115, -10.43141615502449421, -7.119422589171843694},
    {0.5121052631578937, -5.1722222222222225, -7.185695495448177804, -3.354377431743546006},
    {0.5121052631578937, -3.1033333333333335, -3.942110492169725389, -0.4436214339294873127},
    {0.5121052631578937, -1.0344444444444445, -0.7068821856917096608, 0.9372577141714747590},
    {0.5121052631578937, 1.0344444444444445, -0.7068821856917096608, -0.9372577141714747590},
    {0.5121052631578937, 3.1033333333333335, -3.942110492169725389, 0.4436214339294873127},
    {0.5121052631578937, 5.1722222222222225, -7.185695495448177804, 3.354377431743546006},
    {0.5121052631578937, 7.2411111111111115, -10.43141615502449421, 7.119422589171843694},
    {0.5121052631578937, 9.31, -13.67817317628229557, 11.48492496281874815},
    {1.536315789473683, -9.31, -11.39142331404957687, -13.03614524933546246},
    {1.536315789473683, -7.2411111111111115, -8.400993916062192999, -8.654237234448330763},
    {1.536315789473683, -5.1722222222222225, -5.497298248302274206, -4.859767570727260702},
    {1.536315789473683, -3.1033333333333335, -2.767607187547012892, -1.881128041808820414},
    {1.536315789473683, -1.0344444444444445, -0.5542961588667886505, -0.1925227111252281389},
    {1.536315789473683, 1.0344444444444445, -0.5542961588667886505, 0.1925227111252281389},
    {1.536315789473683, 3.1033333333333335, -2.767607187547012892, 1.881128041808820414},
    {1.536315789473683, 5.1722222222222225, -5.497298248302274206, 4.859767570727260702},
    {1.536315789473683, 7.2411111111111115, -8.400993916062192999, 8.654237234448330763},
    {1.536315789473683, 9.31, -11.39142331404957687, 13.03614524933546246},
    {2.560526315789474, -9.31, -9.092322830792256784, -14.47617940922225266},
    {2.560526315789474, -7.2411111111111115, -6.350355849339400085, -10.04731396100441345},
    {2.560526315789474, -5.1722222222222225, -3.770195251236320771, -6.170709968792969547},
    {2.560526315789474, -3.1033333333333335, -1.493763620456244304, -3.016078984322079644},
    {2.560526315789474, -1.0344444444444445, 0.08225913242744498686, -0.7962963225796128073},
    {2.560526315789474, 1.0344444444444445, 0.08225913242744498686, 0.7962963225796128073},
    {2.560526315789474, 3.1033333333333335, -1.493763620456244304, 3.016078984322079644},
    {2.560526315789474, 5.1722222222222225, -3.770195251236320771, 6.170709968792969547},
    {2.560526315789474, 7.2411111111111115, -6.350355849339400085, 10.04731396100441345},
    {2.560526315789474, 9.31, -9.092322830792256784, 14.47617940922225266},
    {3.584736842105263, -9.31, -6.769516240121458010, -15.80888765274739226},
    {3.584736842105263, -7.2411111111111115, -4.261747756492228234, -11.30652567940577752},
    {3.584736842105263, -5.1722222222222225, -1.973862880688590707, -7.306851108998560235},
    {3.584736842105263, -3.1033333333333335, -0.06597144529448215125, -3.916104689650541609},
    {3.584736842105263, -1.0344444444444445, 1.126617929515005901, -1.188049174460877228},
    {3.584736842105263, 1.0344444444444445, 1.126617929515005901, 1.188049174460877228},
    {3.584736842105263, 3.1033333333333335, -0.06597144529448215125, 3.916104689650541609},
    {3.584736842105263, 5.1722222222222225, -1.973862880688590707, 7.306851108998560235},
    {3.584736842105263, 7.2411111111111115, -4.261747756492228234, 11.30652567940577752},
    {3.584736842105263, 9.31, -6.769516240121458010, 15.80888765274739226},
    {4.6089473684210525, -9.31, -4.413152580465761229, -17.04012516214680058},
    {4.6089473684210525, -7.2411111111111115, -2.121088407042523849, -12.44319139957701339},
    {4.6089473684210525, -5.1722222222222225, -0.08874522069622561554, -8.293373078564243119},
    {4.6089473684210525, -3.1033333333333335, 1.530006426704367023, -4.645305938101568904},
    {4.6089473684210525, -1.0344444444444445, 2.478235759814422191, -1.474947825792762719},
    {4.6089473684210525, 1.0344444444444445, 2.478235759814422191, 1.474947825792762719},
    {4.6089473684210525, 3.1033333333333335, 1.530006426704367023, 4.645305938101568904},
    {4.6089473684210525, 5.1722222222222225, -0.08874522069622561554, 8.293373078564243119},
    {4.6089473684210525, 7.2411111111111115, -2.121088407042523849, 12.44319139957701339},
    {4.6089473684210525, 9.31, -4.413152580465761229, 17.04012516214680058},
    {5.633157894736842, -9.31, -2.015253525234687046, -18.17708601551296387},
    {5.633157894736842, -7.2411111111111115, 0.08158741018418602624, -13.47027820888931508},
    {5.633157894736842, -5.1722222222222225, 1.894851744923199338, -9.155411613417342345},
    {5.633157894736842, -3.1033333333333335, 3.288292590034924427, -5.251071541297535390},
    {5.633157894736842, -1.0344444444444445, 4.070871149207905662, -1.700543110511263707},
    {5.633157894736842, 1.0344444444444445, 4.070871149207905662, 1.700543110511263707},
    {5.633157894736842, 3.1033333333333335, 3.288292590034924427, 5.251071541297535390},
    {5.633157894736842, 5.1722222222222225, 1.894851744923199338, 9.155411613417342345},
    {5.633157894736842, 7.2411111111111115, 0.08158741018418602624, 13.47027820888931508},
    {5.633157894736842, 9.31, -2.015253525234687046, 18.17708601551296387},
    {6.657368421052631, -9.31, 0.4302075299791462864, -19.22764406133788353},
    {6.657368421052631, -7.2411111111111115, 2.352480046857671066, -14.40091101939969438},
    {6.657368421052631, -5.1722222222222225, 3.979675663698688554, -9.915100728297147445},
    {6.657368421052631, -3.1033333333333335, 5.196208725103048000, -5.765913777551858881},
    {6.657368421052631, -1.0344444444444445, 5.860445459821330656, -1.886183765947080820},
    {6.657368421052631, 1.0344444444444445, 5.860445459821330656, 1.886183765947080820},
    {6.657368421052631, 3.1033333333333335, 5.196208725103048000, 5.765913777551858881},
    {6.657368421052631, 5.1722222222222225, 3.979675663698688554, 9.915100728297147445},
    {6.657368421052631, 7.2411111111111115, 2.352480046857671066, 14.40091101939969438},
    {6.657368421052631, 9.31, 0.4302075299791462864, 19.22764406133788353},
    {7.681578947368422, -9.31, 2.927444058992560563, -20.19980207537261848},
    {7.681578947368422, -7.2411111111111115, 4.694769425471743034, -15.24741053060578237},
    {7.681578947368422, -5.1722222222222225, 6.164292418625706468, -10.59072567191647572},
    {7.681578947368422, -3.1033333333333335, 7.240029862422980417, -6.211994811172497089},
    {7.681578947368422, -1.0344444444444445, 7.816056776253939541, -2.043798301213067661},
    {7.681578947368422, 1.0344444444444445, 7.816056776253939541, 2.043798301213067661},
    {7.681578947368422, 3.1033333333333335, 7.240029862422980417, 6.211994811172497089},
    {7.681578947368422, 5.1722222222222225, 6.164292418625706468, 10.59072567191647572},
    {7.681578947368422, 7.2411111111111115, 4.694769425471743034, 15.24741053060578237},
    {7.681578947368422, 9.31, 2.927444058992560563, 20.19980207537261848},
    {8.70578947368421, -9.31, 5.479117801286091709, -21.10129574331183565},
    {8.70578947368421, -7.2411111111111115, 7.109425595583331617, -16.02081486561552628},
    {8.70578947368421, -5.1722222222222225, 8.445048265170028726, -11.19694852766695128},
    {8.70578947368421, -3.1033333333333335, 9.407004239397889561, -6.604698742702069241},
    {8.70578947368421, -1.0344444444444445, 9.914997316336425160, -2.180695414205570917},
    {8.70578947368421, 1.0344444444444445, 9.914997316336425160, 2.180695414205570917},
    {8.70578947368421, 3.1033333333333335, 9.407004239397889561, 6.604698742702069241},
    {8.70578947368421, 5.1722222222222225, 8.445048265170028726, 11.19694852766695128},
    {8.70578947368421, 7.2411111111111115, 7.109425595583331617, 16.02081486561552628},
    {8.70578947368421, 9.31, 5.479117801286091709, 21.10129574331183565},
    {9.73, -9.31, 8.086641614936586130, -21.93934855626411798},
    {9.73, -7.2411111111111115, 9.595911748704587451, -16.73073666097985672},
    {9.73, -5.1722222222222225, 10.81728092211695973, -11.74539995483509690},
    {9.73, -3.1033333333333335, 11.68588616508688807, -6.954979657328710375},
    {9.73, -1.0344444444444445, 12.13993364226615342, -2.301666512671865844},
    {9.73, 1.0344444444444445, 12.13993364226615342, 2.301666512671865844},
    {9.73, 3.1033333333333335, 11.68588616508688807, 6.954979657328710375},
    {9.73, 5.1722222222222225, 10.81728092211695973, 11.74539995483509690},
    {9.73, 7.2411111111111115, 9.595911748704587451, 16.73073666097985672},
    {9.73, 9.31, 8.086641614936586130, 21.93934855626411798},
};

// log Gamma(1 + i)
inline constexpr double lngamma_1pi_re = -0.6509231993018563389;
inline constexpr double lngamma_1pi_im = -0.3016403204675331979;

// Gamma(0.7)/Gamma(0.3)
inline constexpr double a_03_03 = 0.4339045290247251443;

// Gamma(0.3)/Gamma(0.7)
inline constexpr double cgamma_03_03 = 2.304654441491245846;

struct BesselPoint {
    int n;
    double x;
    double j;
};

inline constexpr BesselPoint bessel_table[] = {
    {0, 0.5000000000000000000, 0.9384698072408129042},
    {0, 2.500000000000000000, -0.04838377646819799633},
    {0, 14.70000000000000000, 0.04764184590152175078},
    {0, 100.0000000000000000, 0.01998585030422312242},
    {0, 9999.000000000000000, -0.0007645874860391962951},
    {1, 1.000000000000000000, 0.4400505857449335160},
    {1, 35.20000000000000000, 0.01773867336450780285},
    {2, 7.300000000000000000, -0.2655949118834368829},
    {5, 4.000000000000000000, 0.1320866560470982723},
    {5, 120.5000000000000000, 0.03076133779166665744},
    {10, 3.000000000000000000, 0.00001292835164571588378},
    {10, 28.00000000000000000, 0.1152148107721494914},
    {32, 30.00000000000000000, 0.06757019185908603508},
    {32, 1000.000000000000000, 0.01930200683508058168},
    {64, 65.00000000000000000, 0.1363165177534283302},
    {64, 9000.000000000000000, -0.002883865678549292331},
};

// first positive zero of J_0
inline constexpr double j0_zero1 = 2.404825557695772769;

} // namespace sovc_test_ref
