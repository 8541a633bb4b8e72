// Generated by tools/gen_bessel_coeffs.py; do not edit by hand.
#ifndef QCWAVE_DETAIL_BESSEL_TABLES_HPP
#define QCWAVE_DETAIL_BESSEL_TABLES_HPP

#include <array>

namespace qcwave::detail {

inline constexpr std::array<double, 18> kJ0Small = {
    1.5772797147489011956e-1,
    -8.7234423528522212908e-3,
    2.6517861320333680987e-1,
    -3.7009499387264977903e-1,
    1.5806710233209726128e-1,
    -3.4893769411408885163e-2,
    4.8191800694676044968e-3,
    -4.606261662062750475e-4,
    3.2460328821005080806e-5,
    -1.7619469077621507495e-6,
    7.608163592418781867e-8,
    -2.6792535305576728983e-9,
    7.8486963144794644165e-11,
    -1.9438346867370165706e-12,
    4.1253205956343739326e-14,
    -7.5885081254475463376e-16,
    1.2218515873961411034e-17,
    -1.7367896077002367683e-19,
};

inline constexpr std::array<double, 17> kJ1Small = {
    8.1044846325658115105e-2,
    -1.4897514506765210906e-1,
    1.6099926235720970255e-1,
    -8.2680491766817906597e-2,
    2.221363965496603541e-2,
    -3.6469406007692759578e-3,
    4.0503377283548218331e-4,
    -3.2555548668572585168e-5,
    1.9858774049915167414e-6,
    -9.5219847567504361821e-8,
    3.6871337590971482385e-9,
    -1.1780266226958848398e-10,
    3.1601545803480033215e-12,
    -7.2217552396517734285e-14,
    1.4232144003513942316e-15,
    -2.4441972916190463893e-17,
    3.6912682997929332622e-19,
};

inline constexpr std::array<double, 18> kY0Small = {
    3.645469809116044361e-2,
    -2.7832370940758248315e-1,
    2.9604999902071481676e-1,
    9.8255084081878640577e-2,
    -1.0755155280627783505e-1,
    3.1799074084414515427e-2,
    -5.161397105810714949e-3,
    5.4985253200390115387e-4,
    -4.1996983149420130705e-5,
    2.4290361107923793976e-6,
    -1.1049969793472956112e-7,
    4.066517365979110493e-9,
    -1.2374148898289852487e-10,
    3.1685725528945944421e-12,
    -6.9269560324310010835e-14,
    1.3086308625876684015e-15,
    -2.1586201986914483197e-17,
    3.1368631824799381496e-19,
};

inline constexpr std::array<double, 18> kY1Small = {
    3.8300769852423778829e-2,
    -8.1825614127328264064e-2,
    -2.4867707612196400509e-2,
    4.796745275274698292e-2,
    -1.8525884510898022173e-2,
    3.6806076878235111017e-3,
    -4.6272540602933687152e-4,
    4.0694002695808698676e-5,
    -2.6617695125295626191e-6,
    1.3506026913254338045e-7,
    -5.4835241103362765753e-9,
    1.8245086841229007743e-10,
    -5.0706666365911291344e-12,
    1.1956162517587949013e-13,
    -2.4231624427124732278e-15,
    4.2681265130729623577e-17,
    -6.5960609787230412421e-19,
    9.0181230813094543277e-21,
};

inline constexpr std::array<double, 16> kP0Large = {
    9.9946034934751866537e-1,
    -5.3652204681321174247e-4,
    3.0751847875194746219e-6,
    -5.170594537606097701e-8,
    1.6306464635151383095e-9,
    -7.864091377237069999e-11,
    5.1682623873491924622e-12,
    -4.3045788699253912224e-13,
    4.3265957431549405642e-14,
    -5.0690340959352360775e-15,
    6.7480722157338737041e-16,
    -1.0011513723467785834e-16,
    1.6305919233744184736e-17,
    -2.880866169482871202e-18,
    5.4680827832590383688e-19,
    -1.1062036496829716611e-19,
};

inline constexpr std::array<double, 19> kQ0Large = {
    -1.55558546053370091e-2,
    6.8385199426116495994e-5,
    -7.4144984110606472645e-7,
    1.7972457247968991784e-8,
    -7.2719159368663199794e-10,
    4.2201219046687384438e-11,
    -3.2067474209966347446e-12,
    3.0061451253517063112e-13,
    -3.336328185322426997e-14,
    4.2552250402454611232e-15,
    -6.0999301316400500098e-16,
    9.6621289703032567377e-17,
    -1.66860652143781463e-17,
    3.1082440486738144337e-18,
    -6.1911157873581449274e-19,
    1.3091448717220121548e-19,
    -2.9211627152642773623e-20,
    6.8432273946382509918e-21,
    -1.6757685660424699479e-21,
};

inline constexpr std::array<double, 16> kP1Large = {
    1.0009030408600136999,
    8.9898983308594085557e-4,
    -3.9872843004889085228e-6,
    6.1776339606442985349e-8,
    -1.8718907491063066087e-9,
    8.8168986595823388985e-11,
    -5.7048636403956447019e-12,
    4.6991955152305423752e-13,
    -4.6842237839904892216e-14,
    5.4526748960447171683e-15,
    -7.2211808422740179189e-16,
    1.0667689114335412457e-16,
    -1.7312313216116334973e-17,
    3.0492991197665872261e-18,
    -5.7724216549874536589e-19,
    1.1650571755711490528e-19,
};

inline constexpr std::array<double, 18> kQ1Large = {
    4.6777787069535325241e-2,
    -9.6277235491570793242e-5,
    9.1386152579554541244e-7,
    -2.0959781384083422461e-8,
    8.229193327650554129e-10,
    -4.6863636881769452305e-11,
    3.5152187949686080851e-12,
    -3.264315674327899926e-13,
    3.596776582916529193e-14,
    -4.5612523950772971943e-15,
    6.5082829577833839539e-16,
    -1.0269147531823242863e-16,
    1.7676355487764791603e-17,
    -3.2834519872981614605e-18,
    6.5240811495892603031e-19,
    -1.3765771484849488031e-19,
    3.0657415400328893885e-20,
    -7.1695934693402773766e-21,
};

}  // namespace qcwave::detail

#endif  // QCWAVE_DETAIL_BESSEL_TABLES_HPP
