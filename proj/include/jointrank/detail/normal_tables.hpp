#pragma once

// Piecewise-Chebyshev coefficient tables for the batched normal CDF and quantile
// kernels, evaluated with the Clenshaw recurrence. Accuracy is pinned by unit
// tests: |Phi| error < 1e-15 absolute, quantile error < 5e-15 scaled for
// arguments above 1e-80, < 3e-9 beyond.

namespace jointrank::detail {

inline constexpr int kPhiIntervals = 18;
inline constexpr int kPhiDegree = 12;
inline constexpr double kPhiLo = -9.0;
inline constexpr double kPhiCoef[] = {
    0x1.9a023217f201ep-59, 0x1.2a441d9f8ecd9p-58, 0x1.126b8bac4ea6cp-59, 0x1.67c120b5fc906p-61, 0x1.696932cce1039p-63, 0x1.23b3cd9337423p-65, 0x1.86d641ccdaa6bp-68, 0x1.bcfcafcaf7197p-71, 0x1.b6289121ced31p-74, 0x1.7a30a3ea94652p-77, 0x1.212e20eb4143ap-80, 0x1.8b0ee16547277p-84, 0x1.e552992e3e978p-88,
    0x1.b344170bd9276p-53, 0x1.34d554635fc37p-52, 0x1.102b6f7842d26p-53, 0x1.52ebe05c6ff0cp-55, 0x1.41c929b32be17p-57, 0x1.e912b7d1e2cbbp-60, 0x1.337ce04485a9ep-62, 0x1.478ab1f749b39p-65, 0x1.2ccccc51f60b1p-68, 0x1.e2b303e3f41c7p-72, 0x1.55dea1341ceb5p-75, 0x1.aedc2a749a3eep-79, 0x1.e615418a21a90p-83,
    0x1.69fb0d323e1d9p-47, 0x1.f3519e17b6f76p-47, 0x1.a3c46845d0763p-48, 0x1.ee59bc17954a6p-50, 0x1.b983e68ac6fcdp-52, 0x1.3a5071e14a043p-54, 0x1.70ddb8f9fa0f7p-57, 0x1.6d5d226c789bbp-60, 0x1.36cb4e9187d84p-63, 0x1.cc03d53bc3acap-67, 0x1.2b1567f8ebf8bp-70, 0x1.582279cc2a37cp-74, 0x1.602d43026f9c5p-78,
    0x1.d7f688eaf0a71p-42, 0x1.3b2d7edb3c556p-41, 0x1.f727cca2dd52ep-43, 0x1.16cd8e61e7205p-44, 0x1.d1f29843d3582p-47, 0x1.34e6f9ea43fa3p-49, 0x1.501a8e6554ba1p-52, 0x1.33415de05250dp-55, 0x1.e00d6bcd216ebp-59, 0x1.446eb2a9e5a05p-62, 0x1.7eb8915a522a4p-66, 0x1.8c5ae47697583p-70, 0x1.69804881ef711p-74,
    0x1.e2c2627dc6761p-37, 0x1.36b8107aa34c7p-36, 0x1.d4790ea2cb000p-38, 0x1.e5bf66858d0f9p-40, 0x1.7960c1bc89b24p-42, 0x1.ceaeb280a3f3dp-45, 0x1.ceff512e9a089p-48, 0x1.82ff77dddab59p-51, 0x1.1295bae9bf495p-54, 0x1.4e6fc917c0e58p-58, 0x1.600e3171aac48p-62, 0x1.4150dd71d3fb3p-66, 0x1.fbf4e78dbe884p-71,
    0x1.83be8c60ce755p-32, 0x1.de7b89d594394p-32, 0x1.5293ed0609fccp-33, 0x1.464495f66eb88p-35, 0x1.d3cd73b54021ap-38, 0x1.06e582515cb7bp-40, 0x1.df0618331ec22p-44, 0x1.69abe9601c1b8p-47, 0x1.cb38bb88a170ap-51, 0x1.ee8270f6cb008p-55, 0x1.c4ffaf34eaf19p-59, 0x1.5fd379fdae6bbp-63, 0x1.c94ee8054a6c3p-68,
    0x1.e9990bce29a64p-28, 0x1.1fc47453ab285p-27, 0x1.7b8e97931f993p-29, 0x1.513d423be2545p-31, 0x1.ba229d26abce4p-34, 0x1.c2ab03ed84137p-37, 0x1.70e910bdbcffap-40, 0x1.eeeac1ce49eeep-44, 0x1.131b65f24f313p-47, 0x1.fc735c590be78p-52, 0x1.83e49e05d1e34p-56, 0x1.dd37375a3d88bp-61, 0x1.bbbfec7d3706ep-66,
    0x1.e68a941d06772p-24, 0x1.0e66174766f87p-23, 0x1.49a07990ab5bep-25, 0x1.0b7915b6e5855p-27, 0x1.3d04b591dd927p-30, 0x1.20f465f89cbf6p-33, 0x1.a1721427c5c03p-37, 0x1.e5956ef904e06p-41, 0x1.c87120a4bd200p-45, 0x1.56a5573dc855bp-49, 0x1.8a3a5c66e3bd5p-54, 0x1.2fe2127e3cf97p-59, 0x1.af8201effb722p-67,
    0x1.7d15f18f38d88p-20, 0x1.8d036341e6a22p-20, 0x1.bae0c3d09554ap-22, 0x1.445b7e6445e29p-24, 0x1.567c674a54d5ap-27, 0x1.11d55e3e0f8eep-30, 0x1.53e6f6b3ef6bfp-34, 0x1.496365dcd68aap-38, 0x1.e980f0decea4ep-43, 0x1.041aaf61856eep-47, 0x1.2471e6b2ea5f9p-53, -0x1.5d7a8ed57b588p-59, -0x1.3c6b0077641e3p-62,
    0x1.d759055be6875p-17, 0x1.c7785f6f593d3p-17, 0x1.cb6036bec47a2p-19, 0x1.2b2835dacb679p-21, 0x1.13e1e7b68e942p-24, 0x1.7837c2c2feccbp-28, 0x1.7fe9c043818a0p-32, 0x1.1e2e7db0d59fdp-36, 0x1.16c24a9b2f627p-41, 0x1.47410fd67e1d9p-48, -0x1.0075212a60d4fp-51, -0x1.f6b2305cd852ep-56, -0x1.98cd0f3cfb08cp-61,
    0x1.cd4a32f3ef60ep-14, 0x1.985563659ffa5p-14, 0x1.6ed74b60abbf2p-16, 0x1.a08bef9c2abaap-19, 0x1.460bf3835a0ecp-22, 0x1.6a024ab1878ddp-26, 0x1.15c2b4ddaf6d5p-30, 0x1.f48f3c2bc33b6p-36, -0x1.89ebe98aa884cp-46, -0x1.8e78372527839p-45, -0x1.262ea3974f677p-49, -0x1.1902a54c2fd4bp-55, 0x1.6a3bd17aba893p-60,
    0x1.6626f2c38401bp-11, 0x1.1e18b814f3db8p-11, 0x1.c148e1a990419p-14, 0x1.b0b6be06c35afp-17, 0x1.12b0eae2be4e6p-20, 0x1.c4f974a0ae6cbp-25, 0x1.8b59953f7bf8dp-30, -0x1.fba1a8c4fbe6dp-37, -0x1.b8e976e31da01p-39, -0x1.0ced114bc36afp-43, -0x1.23b269206de65p-51, 0x1.34969d842c8ffp-53, 0x1.79b6d7cd85f30p-58,
    0x1.bab0a500828a8p-9, 0x1.39581544dc9ebp-9, 0x1.a370ea2343d06p-12, 0x1.48c1deaa9a8d2p-15, 0x1.36cd8d6758efap-19, 0x1.2129317e1049fp-24, -0x1.06e675fa18bd4p-30, -0x1.79cda0cef55fcp-33, -0x1.96b9adc7eaaa7p-38, 0x1.66fadd1f2fe58p-45, 0x1.522ae5cc03110p-47, 0x1.17a8251844665p-52, -0x1.3ce46734f0457p-58,
    0x1.b56d7e49a32d0p-7, 0x1.0c410713542e3p-7, 0x1.27a00b15a5e64p-10, 0x1.5f7c43e9f974bp-14, 0x1.8c20b3867f4c8p-19, -0x1.011a6243f74f3p-25, -0x1.02d87a4bcaeb7p-27, -0x1.0f94bb5025577p-32, 0x1.130c86afcfb88p-38, 0x1.17bb7e129abb4p-41, 0x1.3418017721ddbp-47, -0x1.dee454304b38cp-52, -0x1.904b51eec4d60p-56,
    0x1.5b7ea09cf3160p-5, 0x1.670b0ea9cb8c8p-6, 0x1.354c905fb7725p-9, 0x1.e069517787f3ep-14, 0x1.1cd23c347aa8cp-23, -0x1.19302b43c0549p-22, -0x1.5177d8f1b9a3ap-27, 0x1.8a890bb644b36p-33, 0x1.7741ebdf158c0p-36, 0x1.156c632f4b8f5p-42, -0x1.b448c714a4204p-46, -0x1.d03125392d8a9p-51, 0x1.d8825339a913ap-57,
    0x1.bf4583164aab5p-4, 0x1.77adf0ba1e0a3p-5, 0x1.d016eec6c2a85p-9, 0x1.10f417d8baf02p-14, -0x1.be50af0d42d5ep-18, -0x1.8292a541519d1p-22, 0x1.323431ac1af08p-28, 0x1.a6797bd0c9966p-31, 0x1.0a35c8944e931p-37, -0x1.235fb7b9add8ap-40, -0x1.e12110880adc9p-46, 0x1.099de0533f59dp-50, 0x1.2dd48c4c639abp-55,
    0x1.d74ab1b26c4b9p-3, 0x1.334f783c47f4cp-4, 0x1.c8b863038a69fp-9, -0x1.67eb250ae173bp-14, -0x1.732ec68d8dec5p-17, -0x1.cd63ea7133ce4p-28, 0x1.89afd52aba938p-26, 0x1.5f74b7e3af74bp-32, -0x1.30420a05b6fddp-35, -0x1.dc3c573bcd727p-41, 0x1.69387b1ea78b8p-45, 0x1.9a757b1625e1bp-50, -0x1.5d09fef671c7fp-56,
    0x1.9c742c0fb4b2fp-2, 0x1.8911b674ce50cp-4, 0x1.85f2a6a65eab4p-10, -0x1.e98d92928792ap-13, -0x1.7dd23ef81d752p-18, 0x1.123bb78692e8ap-21, 0x1.f265c9488720bp-27, -0x1.e65ce2a802cf2p-31, -0x1.e7d5e4cfba7cap-36, 0x1.5eff493a51534p-40, 0x1.7dc5d29217712p-45, -0x1.a7fcdcc51753cp-50, -0x1.60cbcd9ba8d16p-54,
};

inline constexpr int kInvCentralIntervals = 4;
inline constexpr int kInvCentralDegree = 14;
inline constexpr double kInvCentralSMax = 0x1.71eb851eb851ep-3;
inline constexpr double kInvCentralCoef[] = {
    0x1.4910a750cf10dp+1, 0x1.0e0927baae111p-4, 0x1.d5de93ffb445cp-10, 0x1.fa0b58f271d2bp-15, 0x1.2dcd218661f80p-19, 0x1.7e397d83e2066p-24, 0x1.f78b5e79e9d67p-29, 0x1.5512602b0012ep-33, 0x1.d79d92de351f5p-38, 0x1.4d60fdd363b0fp-42, 0x1.9c5ff4db4cf9dp-47, 0x1.428d44b046e2cp-49, -0x1.da4cc7c73573fp-50, 0x1.d4ff388b2dca6p-50, -0x1.e0a1d4746c9bep-50,
    0x1.5c241cdcbd84dp+1, 0x1.57db1d2356c7fp-4, 0x1.708dd286dbf96p-9, 0x1.ec706040a13e6p-14, 0x1.6d6db21ca606ap-18, 0x1.205ba571cb873p-22, 0x1.d9c865747124dp-27, 0x1.907044efb6323p-31, 0x1.59ab78653aa85p-35, 0x1.2f4b41c2ed316p-39, 0x1.0d9c25887fff4p-43, 0x1.e5755987f55a0p-48, 0x1.d9af82a70247dp-52, 0x1.541affb64ed6cp-55, 0x1.3a7a55ba747bcp-55,
    0x1.754392fbb74adp+1, 0x1.d37f4bcf73097p-4, 0x1.48243f6298ca5p-8, 0x1.21d0605b9923cp-12, 0x1.1d62179738540p-16, 0x1.2b5ddbad99244p-20, 0x1.47438518e9409p-24, 0x1.704a597eb7b5ap-28, 0x1.a776bebefa06dp-32, 0x1.ef08003b28717p-36, 0x1.2525e00856b58p-39, 0x1.5f31bdbdccb45p-43, 0x1.a33cf499d506cp-47, 0x1.2b373f9a9178fp-50, -0x1.c79cae0014f6dp-55,
    0x1.99999caa5ee6fp+1, 0x1.6618f93d05893p-3, 0x1.70fe3486ba773p-7, 0x1.e4f0fecee6008p-11, 0x1.651568d451473p-14, 0x1.18bf40d806a7bp-17, 0x1.cc9bcf1dc379dp-21, 0x1.853d62072315dp-24, 0x1.5037da86f5b85p-27, 0x1.2759310aaf779p-30, 0x1.06ed300e38f7bp-33, 0x1.d938c6afa5f66p-37, 0x1.ad9cabe8cb2ebp-40, 0x1.896d4266b6d67p-43, 0x1.661f6a5c55459p-46,
};

inline constexpr int kInvTailPieces = 7;
inline constexpr int kInvTailDegree = 14;
inline constexpr double kInvTailEdges[] = { 0x1.999999999999ap+0, 0x1.3333333333333p+1, 0x1.ccccccccccccdp+1, 0x1.599999999999ap+2, 0x1.0000000000000p+3, 0x1.8000000000000p+3, 0x1.2000000000000p+4, 0x1.b000000000000p+4 };
inline constexpr double kInvTailCoef[] = {
    0x1.0ab79705cce34p+1, 0x1.4ea87cece5121p-1, -0x1.93996df756450p-8, 0x1.e5d214afe8c54p-12, -0x1.318158ed8031fp-15, 0x1.8cf2814e1dc96p-19, -0x1.08d51a06d74ccp-22, 0x1.696c3d35644a3p-26, -0x1.f6c4c3d950f87p-30, 0x1.63643c57ad3d9p-33, -0x1.fd49c4596f64bp-37, 0x1.71119054fd233p-40, -0x1.0e0d655d5f82ap-43, 0x1.89ba577f1becap-47, -0x1.2bf8c5c2d2dfdp-50,
    0x1.d47de2bf05ef9p+1, 0x1.d853842b68cb3p-1, -0x1.673145b8264a4p-8, 0x1.c50f4d2459767p-12, -0x1.28028ca4ef7d9p-15, 0x1.8c42d79a58576p-19, -0x1.0e3baf63946b1p-22, 0x1.7662071aa0b72p-26, -0x1.06e8a87fa8004p-29, 0x1.75cb4bbf6d2ebp-33, -0x1.0caa0a4d24dcdp-36, 0x1.8711299793e01p-40, -0x1.2307e8cb446a2p-43, 0x1.27c05bdba6316p-46, -0x1.2a6542b36c25dp-48,
    0x1.7a9c99ed98e97p+2, 0x1.554b88b1d4cb5p+0, -0x1.32dd46ab41e28p-8, 0x1.928b4daa15e3dp-12, -0x1.105270c1c55a1p-15, 0x1.77ec7a1e06b82p-19, -0x1.073fa35cef9c2p-22, 0x1.74df44f3d931bp-26, -0x1.0a8ec0529ea75p-29, 0x1.803bce0d3016dp-33, -0x1.16f31dcd0104ep-36, 0x1.980fb4c30cd48p-40, -0x1.2a834db28e896p-43, 0x1.e2bc321b6d485p-47, -0x1.398466641eb36p-51,
    0x1.2448d2a1f90d1p+3, 0x1.e2a01367e5fd6p+0, -0x1.ddb296cf1627bp-9, 0x1.393cb38c62a40p-12, -0x1.a673ef1d9938ep-16, 0x1.220ad73c7cdc8p-19, -0x1.9354b08fef869p-23, 0x1.1b191e9b248dfp-26, -0x1.9060e0e9c09a5p-30, 0x1.1cdb699f36981p-33, -0x1.9784bf6c5e44ep-37, 0x1.25814fa467341p-40, -0x1.b2ec96204ec31p-44, 0x1.b8664150e57b9p-47, -0x1.49670541a86cap-48,
    0x1.bc55020718685p+3, 0x1.6edf097074601p+1, -0x1.9953fb347eb92p-9, 0x1.1ba361d64c032p-12, -0x1.93319cb3ad6b2p-16, 0x1.234a29ff63651p-19, -0x1.a9bee3ed0ded1p-23, 0x1.39cd4f10c5255p-26, -0x1.d1a95dc44bcedp-30, 0x1.5b58f08857783p-33, -0x1.04429350f13c9p-36, 0x1.86c97c08f69c8p-40, -0x1.2a19ed3750326p-43, 0x1.6edf840cfaa2bp-47, -0x1.df8e69e6f6af0p-50,
    0x1.505df49c7279ep+4, 0x1.11615504004fcp+2, -0x1.4134550a32aa0p-9, 0x1.c60e784860934p-13, -0x1.486480a02aea3p-16, 0x1.e215d5118f5b3p-20, -0x1.658dc546c2f4bp-23, 0x1.0b421a3281cb6p-26, -0x1.91f387c3be09ep-30, 0x1.2fbbcb818abdap-33, -0x1.cccd037ec652dp-37, 0x1.5f26680277189p-40, -0x1.07b8f7a1cfb9bp-43, 0x1.a1eda34e5cfc9p-47, 0x1.c284d840b1214p-50,
    0x1.fae1c692c3924p+4, 0x1.98b0e0a009c33p+2, -0x1.ee979d100d089p-10, 0x1.634505a71a7bdp-13, -0x1.0494c9df82d98p-16, 0x1.8368a5b1f874bp-20, -0x1.22b006b76ff83p-23, 0x1.b785edd9a0e1ap-27, -0x1.4c67808452cd3p-30, 0x1.0959735a36b5ap-33, -0x1.ce975964c36e2p-38, 0x1.719cafe0cb542p-38, 0x1.07ad83389c6e9p-38, 0x1.ed8e381382bb6p-39, 0x1.b9f3044effa87p-39,
};

}  // namespace jointrank::detail

namespace jointrank::detail {

// erfcx(t) on t in [0, 9/sqrt(2)] as a Chebyshev series in the remapped
// variable z = (t - 2)/(t + 2); relative error < 2e-14.
inline constexpr int kErfcxDegree = 28;
inline constexpr double kErfcxTMax = 0x1.974b2334f2346p+2;
inline constexpr double kErfcxZLo = -0x1.0000000000000p+0;
inline constexpr double kErfcxZHi = 0x1.0b23d31b39af0p-1;
inline constexpr double kErfcxCoef[] = {
    0x1.d54ee024f1c17p-2, -0x1.caf299c255daep-2, 0x1.5ee98a4b18caap-4, -0x1.09bb47eb40faep-7, -0x1.8332b4cb82fc4p-13, 0x1.a73eafe4df9dcp-14, 0x1.86ee238a951d8p-19, -0x1.a9be605f4832fp-20, -0x1.26991a63e787cp-23, 0x1.7d928ad7b0874p-26, 0x1.578cb6fce64fcp-28, 0x1.a8ca8ec74968ep-37, -0x1.0b63371b4d31cp-33, -0x1.21fa83f7a0de1p-36, 0x1.f6aee221d58f0p-41, 0x1.525bbb7d8f3eap-41, 0x1.4cc8b4e239b63p-44, -0x1.7e7d63e9949e5p-48, -0x1.a16490b2d51ecp-49, -0x1.4e5eded6f090cp-51, 0x1.45fb3f45aefe4p-53, -0x1.0485dad652be3p-55, 0x1.279b1a7780ed2p-54, -0x1.d8ca813895c1fp-53, 0x1.b7f0ea43491bfp-56, -0x1.0fffdc77ca12fp-53, -0x1.1dbb370c51d5bp-53, 0x1.6f84a5ff94c18p-58, -0x1.8850696e2029dp-55,
};

}  // namespace jointrank::detail
