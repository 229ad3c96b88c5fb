// Generated by scripts/gen_oracles.py -- do not edit by hand.
// Regenerate with: python3 scripts/gen_oracles.py
#pragma once

namespace balking_ps::oracles {

struct erfc_pts_row { double x; double value; };
inline constexpr erfc_pts_row erfc_pts[] = {
    {-0x1.8000000000000p+1 /* -3.0 */, 0x1.fffe8d6209afdp+0 /* 1.9999779095030015 */},
    {-0x1.4cccccccccccdp+0 /* -1.3 */, 0x1.ef1b2509b969dp+0 /* 1.9340079449406524 */},
    {-0x1.0000000000000p+0 /* -1.0 */, 0x1.d7bb3d3a08445p+0 /* 1.8427007929497148 */},
    {-0x1.0000000000000p-1 /* -0.5 */, 0x1.853f7ae0c76e9p+0 /* 1.5204998778130465 */},
    {0x1.3333333333333p-2 /* 0.3 */, 0x1.57be3bbf10af8p-1 /* 0.6713732405408726 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.4226162fbddd5p-3 /* 0.15729920705028513 */},
    {0x1.4000000000000p+1 /* 2.5 */, 0x1.aab859b20ac9ep-12 /* 0.0004069520174449589 */},
    {0x1.4000000000000p+2 /* 5.0 */, 0x1.b0c1a759f7739p-40 /* 1.537459794428035e-12 */},
    {0x1.4000000000000p+3 /* 10.0 */, 0x1.7d8a7f2a8a2d0p-149 /* 2.088487583762545e-45 */},
};

struct j0_pts_row { double x; double value; };
inline constexpr j0_pts_row j0_pts[] = {
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.e07f1d54c3f34p-1 /* 0.9384698072408129 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.87c7fdbd7b8f0p-1 /* 0.7651976865579666 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.ca873fb24cef8p-3 /* 0.22389077914123567 */},
    {0x1.d99999999999ap+1 /* 3.7 */, -0x1.98cfcd6c3801fp-2 /* -0.39923020337119114 */},
    {0x1.f99999999999ap+2 /* 7.9 */, 0x1.8e0d953977d77p-3 /* 0.19436184484127825 */},
    {0x1.0333333333333p+3 /* 8.1 */, 0x1.2e1da185ada3cp-3 /* 0.14751745404437766 */},
    {0x1.c666666666666p+3 /* 14.2 */, 0x1.2186459e1068cp-3 /* 0.14136938465712878 */},
    {0x1.bc00000000000p+5 /* 55.5 */, -0x1.cc7508007fdaap-6 /* -0.028104074301152394 */},
    {0x1.909999999999ap+7 /* 200.3 */, 0x1.5194d5b44448bp-10 /* 0.001287770789591999 */},
};

struct lgamma_pts_row { double x; double value; };
inline constexpr lgamma_pts_row lgamma_pts[] = {
    {0x1.999999999999ap-5 /* 0.05 */, 0x1.7c043bd125597p+1 /* 2.9688792010517306 */},
    {0x1.6666666666666p-2 /* 0.35 */, 0x1.de816e3c18e44p-1 /* 0.9345812271462326 */},
    {0x1.75c28f5c28f5cp-1 /* 0.73 */, 0x1.cdda271dd3cf3p-3 /* 0.22551374969268742 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x0.0p+0 /* 0.0 */},
    {0x1.4000000000000p+1 /* 2.5 */, 0x1.2383e809a67e8p-2 /* 0.2846828704729192 */},
    {0x1.d99999999999ap+1 /* 3.7 */, 0x1.6d9625e359b87p+0 /* 1.428072326665388 */},
    {0x1.499999999999ap+3 /* 10.3 */, 0x1.af6cd868fddccp+3 /* 13.482036786138359 */},
    {0x1.5e00000000000p+6 /* 87.5 */, 0x1.2e73d4ceaf3f9p+8 /* 302.45246593264125 */},
    {0x1.34a0000000000p+10 /* 1234.5 */, 0x1.d7e8d07da60e4p+12 /* 7550.550901077895 */},
};

struct w0_pts_row { double z; double value; };
inline constexpr w0_pts_row w0_pts[] = {
    {-0x1.70a3d70a3d70ap-2 /* -0.36 */, -0x1.9cb7155dd38dfp-1 /* -0.8060843159708176 */},
    {-0x1.3333333333333p-2 /* -0.3 */, -0x1.f525db815078bp-2 /* -0.4894022271802149 */},
    {-0x1.999999999999ap-4 /* -0.1 */, -0x1.ca10f00373a29p-4 /* -0.11183255915896297 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.682ce1cadd300p-2 /* 0.35173371124919584 */},
    {0x1.5bf0a8b145769p+1 /* 2.718281828459045 */, 0x1.0000000000000p+0 /* 1.0 */},
    {0x1.8000000000000p+1 /* 3.0 */, 0x1.0cc6d44fa669cp+0 /* 1.04990889496404 */},
    {0x1.9000000000000p+6 /* 100.0 */, 0x1.b15c541472e67p+1 /* 3.38563014029005 */},
    {0x1.7d78400000000p+26 /* 100000000.0 */, 0x1.f5686bccbfc92p+3 /* 15.668996715450962 */},
};

struct phi_pts_row { double rho; double m; double family; double n; double value; };
inline constexpr phi_pts_row phi_pts[] = {
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x0.0p+0 /* 0.0 */, 0x0.0p+0 /* 0.0 */, 0x1.0000000000000p+0 /* 1.0 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x0.0p+0 /* 0.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.8000000000000p+0 /* 1.5 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x0.0p+0 /* 0.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+1 /* 2.0 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x0.0p+0 /* 0.0 */, 0x1.4000000000000p+2 /* 5.0 */, -0x1.0000000000000p+3 /* -8.0 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x0.0p+0 /* 0.0 */, 0x1.4000000000000p+3 /* 10.0 */, -0x1.8000000000000p+10 /* -1536.0 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x0.0p+0 /* 0.0 */, 0x1.4000000000000p+5 /* 40.0 */, -0x1.2000000000000p+43 /* -9895604649984.0 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x0.0p+0 /* 0.0 */, 0x1.0000000000000p+0 /* 1.0 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x0.0p+0 /* 0.0 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, -0x1.0000000000000p+0 /* -1.0 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.4000000000000p+2 /* 5.0 */, 0x1.0000000000000p+2 /* 4.0 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.4000000000000p+3 /* 10.0 */, -0x1.2000000000000p+3 /* -9.0 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.9000000000000p+6 /* 100.0 */, 0x0.0p+0 /* 0.0 */, 0x1.4000000000000p+3 /* 10.0 */, 0x1.f9fdc0b906b0dp+14 /* 32383.438205818693 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.9000000000000p+6 /* 100.0 */, 0x0.0p+0 /* 0.0 */, 0x1.6800000000000p+5 /* 45.0 */, 0x1.3583419933e02p+113 /* 1.2555327517107997e+34 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.9000000000000p+6 /* 100.0 */, 0x0.0p+0 /* 0.0 */, 0x1.4000000000000p+6 /* 80.0 */, 0x1.94230a10f1e25p+235 /* 8.716406819782393e+70 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.9000000000000p+6 /* 100.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.a000000000000p+3 /* 13.0 */, 0x1.7d3e2f3b258e4p+1 /* 2.978460220222688 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.9000000000000p+6 /* 100.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.4000000000000p+6 /* 80.0 */, 0x1.644e1fcca23b2p+153 /* 1.5891741739475632e+46 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.c000000000000p+2 /* 7.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.9000000000000p+4 /* 25.0 */, -0x1.8fc7b322f5576p+25 /* -52399974.27311222 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.4000000000000p+2 /* 5.0 */, 0x0.0p+0 /* 0.0 */, 0x1.c000000000000p+2 /* 7.0 */, 0x1.8ec063c1b0a97p+3 /* 12.46098506765456 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.8000000000000p+3 /* 12.0 */, 0x1.0000000000000p+0 /* 1.0 */},
    {0x1.4000000000000p+2 /* 5.0 */, 0x1.e000000000000p+4 /* 30.0 */, 0x0.0p+0 /* 0.0 */, 0x1.6000000000000p+4 /* 22.0 */, 0x1.660e6cb7c4ca9p+8 /* 358.0563464026878 */},
};

struct density_pts_row { double rho; double n; double t; double value; };
inline constexpr density_pts_row density_pts[] = {
    {0x1.0000000000000p+0 /* 1.0 */, 0x0.0p+0 /* 0.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.338d7f6268dfap-2 /* 0.300344457990121 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x0.0p+0 /* 0.0 */, 0x1.4000000000000p+2 /* 5.0 */, 0x1.9ae3eea881106p-6 /* 0.025078757347743362 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.4000000000000p+2 /* 5.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.388ba5cda7b51p-3 /* 0.15261010679111078 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.0000000000000p+2 /* 4.0 */, 0x1.a9e6feea92ee8p-4 /* 0.10398006035500951 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.4000000000000p+3 /* 10.0 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.5dda78d05b1b5p-4 /* 0.08541342919278956 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.4000000000000p+4 /* 20.0 */, 0x1.4000000000000p+3 /* 10.0 */, 0x1.75196a1810206p-5 /* 0.04554434510692222 */},
    {0x1.4000000000000p+2 /* 5.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.93184ec87c842p-4 /* 0.098411853548698 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x0.0p+0 /* 0.0 */, 0x1.3333333333333p-2 /* 0.3 */, 0x1.5031814bd1d0bp-1 /* 0.6566276936581813 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x0.0p+0 /* 0.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.14c3b5e169ddcp-3 /* 0.13513891309888393 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x0.0p+0 /* 0.0 */, 0x1.8000000000000p+0 /* 1.5 */, 0x1.6d4dc4d495c9bp-3 /* 0.17837098859556452 */},
};

struct tail_pts_row { double rho; double n; double t; double value; };
inline constexpr tail_pts_row tail_pts[] = {
    {0x1.0000000000000p+0 /* 1.0 */, 0x0.0p+0 /* 0.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.c68c54c08a35cp-2 /* 0.443894695522024 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.d37c774ddd4b0p-2 /* 0.45652948773142565 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.4000000000000p+2 /* 5.0 */, 0x1.4000000000000p+2 /* 5.0 */, 0x1.362ef7e642d1ap-2 /* 0.3029135450639885 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.11c255c75b339p-1 /* 0.5346857839445881 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+2 /* 4.0 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.f84ce1773e02fp-2 /* 0.49248077669426754 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x0.0p+0 /* 0.0 */, 0x1.0000000000000p+2 /* 4.0 */, 0x1.6a75a360101b1p-4 /* 0.08849109476523755 */},
};

struct g_pts_row { double rho; double theta; double n; double value; };
inline constexpr g_pts_row g_pts[] = {
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x0.0p+0 /* 0.0 */, 0x1.34f08d5b99584p-2 /* 0.30169888373924203 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.b81d151ca3ac5p-8 /* 0.006715600637689338 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p-2 /* 0.25 */, 0x1.4000000000000p+3 /* 10.0 */, 0x1.5c4a7cf081b70p-9 /* 0.00265724921360138 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+2 /* 4.0 */, 0x1.4000000000000p+2 /* 5.0 */, 0x1.869a2a8837a5fp-19 /* 2.910213258030481e-06 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p-2 /* 0.25 */, 0x0.0p+0 /* 0.0 */, 0x1.40bfde330217bp-1 /* 0.6264638364091718 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p+2 /* 4.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.06990c0aaa1dcp-9 /* 0.00200346252434634 */},
};

struct h_pts_row { double rho; double theta; double n; double value; };
inline constexpr h_pts_row h_pts[] = {
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x0.0p+0 /* 0.0 */, 0x1.adcef4df8b6cbp+0 /* 1.6789391561282396 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.34ecc000ac362p+7 /* 154.46240236379805 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p-2 /* 0.25 */, 0x1.4000000000000p+3 /* 10.0 */, 0x1.e2249ff4d9fa3p+25 /* 63195455.91290214 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+2 /* 4.0 */, 0x1.4000000000000p+2 /* 5.0 */, 0x1.09ff328796bb7p+16 /* 68095.19738142086 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p-2 /* 0.25 */, 0x0.0p+0 /* 0.0 */, 0x1.dff0e80d1c741p+0 /* 1.8747696907052644 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p+2 /* 4.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.43bf628cbeb8dp+11 /* 2589.9807800030744 */},
};

struct phat_pts_row { double rho; double theta; double n; double value; };
inline constexpr phat_pts_row phat_pts[] = {
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p-2 /* 0.25 */, 0x0.0p+0 /* 0.0 */, 0x1.8a3b8a7b1f5f5p-1 /* 0.7699855113311843 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p-2 /* 0.25 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.254e49f093697p-1 /* 0.5728629213496842 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p-2 /* 0.25 */, 0x1.4000000000000p+3 /* 10.0 */, 0x1.4ee5f1fa69747p-2 /* 0.3270490464295687 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p+0 /* 1.0 */, 0x0.0p+0 /* 0.0 */, 0x1.e2fc88ad03980p-2 /* 0.4716664653396023 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.d367888d222c7p-3 /* 0.22822481804566605 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.4000000000000p+3 /* 10.0 */, 0x1.7265b3514daefp-4 /* 0.09042902036604138 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p+2 /* 4.0 */, 0x0.0p+0 /* 0.0 */, 0x1.8a3b8a7b1f5f5p-3 /* 0.19249637783279608 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p+2 /* 4.0 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.fb755c564dde0p-5 /* 0.06194561037630897 */},
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p+2 /* 4.0 */, 0x1.4000000000000p+3 /* 10.0 */, 0x1.73fe2640e19bcp-6 /* 0.022704636914136364 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p-2 /* 0.25 */, 0x0.0p+0 /* 0.0 */, 0x1.7ca2db809b2a4p-1 /* 0.7434300035943875 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p-2 /* 0.25 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.1d49745d10de7p-1 /* 0.5572010387044742 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p-2 /* 0.25 */, 0x1.4000000000000p+3 /* 10.0 */, 0x1.49e3892590487p-2 /* 0.32215704242487003 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x0.0p+0 /* 0.0 */, 0x1.cad3ff1465774p-2 /* 0.4480743271063752 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.c85f56a8edb53p-3 /* 0.22283809378651628 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.4000000000000p+3 /* 10.0 */, 0x1.70aec0716f410p-4 /* 0.09001040623748247 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+2 /* 4.0 */, 0x0.0p+0 /* 0.0 */, 0x1.7ca2db809b2a4p-3 /* 0.18585750089859687 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+2 /* 4.0 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.f7e5c1bc57200p-5 /* 0.06151092375759859 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+2 /* 4.0 */, 0x1.4000000000000p+3 /* 10.0 */, 0x1.739fc2d8ad63cp-6 /* 0.02268213298767406 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p-2 /* 0.25 */, 0x0.0p+0 /* 0.0 */, 0x1.658dc0e1df40dp-1 /* 0.6983471179697759 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p-2 /* 0.25 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.0f7ef3d2920fdp-1 /* 0.5302654451889165 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p-2 /* 0.25 */, 0x1.4000000000000p+3 /* 10.0 */, 0x1.40fe96b398e7cp-2 /* 0.31347117873358576 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x0.0p+0 /* 0.0 */, 0x1.a48ae7f4d7019p-2 /* 0.410686134642448 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.b5b43e41983d8p-3 /* 0.21372269284895995 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.4000000000000p+3 /* 10.0 */, 0x1.6d6e0f715d8f2p-4 /* 0.0892162898288438 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+2 /* 4.0 */, 0x0.0p+0 /* 0.0 */, 0x1.658dc0e1df40dp-3 /* 0.17458677949244397 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+2 /* 4.0 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.f1319a9ea1ea3p-5 /* 0.06069259833480813 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+2 /* 4.0 */, 0x1.4000000000000p+3 /* 10.0 */, 0x1.72e49b2621c2bp-6 /* 0.022637511742257182 */},
};

struct qn_tau_pts_row { double n; double tau; double value; };
inline constexpr qn_tau_pts_row qn_tau_pts[] = {
    {0x0.0p+0 /* 0.0 */, 0x1.0000000000000p-1 /* 0.5 */, 0x1.96f9e0cad2e94p-1 /* 0.7948751685703024 */},
    {0x0.0p+0 /* 0.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.f87146efe3f2ep-2 /* 0.4926196178357597 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p-1 /* 0.5 */, 0x1.d8a8e99983d2cp-2 /* 0.4615818500469284 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.81a33d36a2ea7p-2 /* 0.37659927030538615 */},
    {0x1.8000000000000p+1 /* 3.0 */, 0x1.0000000000000p-1 /* 0.5 */, 0x1.f390524303a75p-3 /* 0.24392761485110595 */},
    {0x1.8000000000000p+1 /* 3.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.d233148e8d01ep-3 /* 0.22763649044065998 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.3b4d804777e12p-2 /* 0.3079128306980873 */},
    {0x0.0p+0 /* 0.0 */, 0x1.0000000000000p+3 /* 8.0 */, 0x1.fd532002e7fb2p-3 /* 0.24869370468968338 */},
};

struct qn_omega_pts_row { double n; double omega; double value; };
inline constexpr qn_omega_pts_row qn_omega_pts[] = {
    {0x0.0p+0 /* 0.0 */, 0x1.0000000000000p-1 /* 0.5 */, 0x1.1047aaa660da8p+0 /* 1.063593545551024 */},
    {0x0.0p+0 /* 0.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.284d0ad0ff1a5p+1 /* 2.3148511429300975 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p-1 /* 0.5 */, 0x1.08fe41f517df8p-2 /* 0.2587824159472514 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.ab5d5308a9b16p+0 /* 1.6693927665853088 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p-1 /* 0.5 */, 0x1.5d1a39015036ap-5 /* 0.042615043008942546 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.e28212bf3ede8p-1 /* 0.9423986299947815 */},
    {0x0.0p+0 /* 0.0 */, 0x1.999999999999ap-4 /* 0.1 */, 0x1.00a3f42d19c4dp+0 /* 1.0025017366513282 */},
};

struct u_pts_row { double n_cap; double t_cap; double value; };
inline constexpr u_pts_row u_pts[] = {
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p+0 /* 1.0 */, -0x1.7e55e595c828dp-2 /* -0.373374545351944 */},
    {0x1.3333333333333p+0 /* 1.2 */, 0x1.3333333333333p-2 /* 0.3 */, 0x1.70c229e225174p-5 /* 0.04501445942256313 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.c28ba89de7394p-1 /* 0.8799717610123587 */},
    {0x0.0p+0 /* 0.0 */, 0x1.4000000000000p+2 /* 5.0 */, -0x1.feba4bf171d5ep-1 /* -0.9975150806648505 */},
    {0x1.0000000000000p-2 /* 0.25 */, 0x1.999999999999ap-5 /* 0.05 */, -0x1.cca9e3fdee5acp-4 /* -0.11246670779555384 */},
    {0x1.8000000000000p+1 /* 3.0 */, 0x1.0000000000000p-1 /* 0.5 */, 0x1.4b4d9e2126b7bp-2 /* 0.3235382755025779 */},
};

struct p0_pts_row { double n_cap; double t_cap; double value; };
inline constexpr p0_pts_row p0_pts[] = {
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.28ed717362ab2p-2 /* 0.28996827379948364 */},
    {0x1.3333333333333p+0 /* 1.2 */, 0x1.3333333333333p-2 /* 0.3 */, 0x1.5785a41e6e32ap-1 /* 0.6709414755960996 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.b6f3089124bc1p-4 /* 0.10716536852332494 */},
    {0x0.0p+0 /* 0.0 */, 0x1.4000000000000p+2 /* 5.0 */, 0x1.4683c405b2e5fp-9 /* 0.00249110954141489 */},
    {0x1.0000000000000p-2 /* 0.25 */, 0x1.999999999999ap-5 /* 0.05 */, 0x1.2c2e616ac1a70p+1 /* 2.3451654216071844 */},
    {0x1.8000000000000p+1 /* 3.0 */, 0x1.0000000000000p-1 /* 0.5 */, 0x1.40b3e1bbed6c7p-2 /* 0.31318619451063195 */},
};

struct p1_pts_row { double n_cap; double t_cap; double value; };
inline constexpr p1_pts_row p1_pts[] = {
    {0x1.0000000000000p-1 /* 0.5 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.0a89bcb91e020p-4 /* 0.06507276267973383 */},
    {0x1.3333333333333p+0 /* 1.2 */, 0x1.3333333333333p-2 /* 0.3 */, -0x1.387244b3d1df4p-2 /* -0.3051233992341331 */},
    {0x1.0000000000000p+1 /* 2.0 */, 0x1.8000000000000p+1 /* 3.0 */, 0x1.872f762fc3a95p-6 /* 0.023876061836797097 */},
    {0x0.0p+0 /* 0.0 */, 0x1.4000000000000p+2 /* 5.0 */, 0x1.23386cbcd2958p-6 /* 0.01777468317895034 */},
    {0x1.0000000000000p-2 /* 0.25 */, 0x1.999999999999ap-5 /* 0.05 */, -0x1.1bd2b1ae6c187p+1 /* -2.217367372672189 */},
    {0x1.8000000000000p+1 /* 3.0 */, 0x1.0000000000000p-1 /* 0.5 */, -0x1.6441e8032589fp-4 /* -0.08697691564370523 */},
};

struct light_p01_pts_row { double n; double t; double p0; double p1; };
inline constexpr light_p01_pts_row light_p01_pts[] = {
    {0x0.0p+0 /* 0.0 */, 0x1.0000000000000p-1 /* 0.5 */, 0x1.368b2fc6f960ap-1 /* 0.6065306597126334 */, -0x1.d1d0c7aa7610fp-4 /* -0.11372449869611877 */},
    {0x0.0p+0 /* 0.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.78b56362cef38p-2 /* 0.36787944117144233 */, -0x1.78b56362cef38p-4 /* -0.09196986029286058 */},
    {0x0.0p+0 /* 0.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.152aaa3bf81ccp-3 /* 0.1353352832366127 */, 0x0.0p+0 /* 0.0 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p-1 /* 0.5 */, 0x1.d1d0c7aa7610fp-2 /* 0.45489799478447507 */, -0x1.72ed5c9f70fa8p-5 /* -0.04527919855493617 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.78b56362cef38p-2 /* 0.36787944117144233 */, -0x1.1011398e79053p-4 /* -0.06642267687817709 */},
    {0x1.0000000000000p+0 /* 1.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.9fbfff59f42b1p-3 /* 0.20300292485491903 */, -0x1.33f68442a1e70p-5 /* -0.03759313423239241 */},
    {0x1.8000000000000p+1 /* 3.0 */, 0x1.0000000000000p-1 /* 0.5 */, 0x1.ff1a694ccfc46p-3 /* 0.2495620943609273 */, -0x1.ed8c7fbcb162cp-8 /* -0.007530957399188003 */},
    {0x1.8000000000000p+1 /* 3.0 */, 0x1.0000000000000p+0 /* 1.0 */, 0x1.f6472f2e6944ap-3 /* 0.24525296078096154 */, -0x1.1d40888e174dbp-6 /* -0.0174104054971068 */},
    {0x1.8000000000000p+1 /* 3.0 */, 0x1.0000000000000p+1 /* 2.0 */, 0x1.b6d8e2def382dp-3 /* 0.21428086512463676 */, -0x1.0976cd24f5083p-5 /* -0.03240528170832226 */},
};

struct n_c_pts_row { double unused_a; double unused_b; double value; };
inline constexpr n_c_pts_row n_c_pts[] = {
    {0x0.0p+0 /* 0.0 */, 0x0.0p+0 /* 0.0 */, 0x1.474973c84120bp+0 /* 1.2784645427610737 */},
};

struct tail_const_pts_row { double rho; double n; double value; };
inline constexpr tail_const_pts_row tail_const_pts[] = {
    {0x1.0000000000000p+0 /* 1.0 */, 0x0.0p+0 /* 0.0 */, 0x1.a07a8ddfaadcep-4 /* 0.10167937678732317 */},
};

} // namespace balking_ps::oracles
