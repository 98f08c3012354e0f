// Copyright 2026 The milc-simd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by gen_frozen_cases.py; do not edit.
// Operands and expected results of one random case per routine.
// Flattening follows verify::run_routine.

#ifndef MILC_TESTS_SUPPORT_FROZEN_CASES_HPP_
#define MILC_TESTS_SUPPORT_FROZEN_CASES_HPP_

#include <string_view>
#include <vector>

namespace frozen {

inline const std::vector<double> k_a = {
    0.5468938990909777, 0.6804324961528079,
    -0.026610929087642843, -0.5004030115993854,
    -0.8482260095623548, -0.8158434294359491,
    0.3395401490831622, 0.004560256198894885,
    -0.5499577083128182, 0.9373739661805425,
    0.21653721308072416, 0.8345027813913746,
    -0.15507143756060326, 0.36723960774281506,
    0.07991020442766317, 0.8216771493193709,
    -0.6451670527317028, 0.5981493476828206};
inline const std::vector<double> k_b = {
    -0.09861472899110835, -0.3927042195664132,
    0.42484623151045664, 0.11653161917013444,
    0.43340014638186153, -0.9111272327698487,
    -0.1290143156115331, 0.044495662272274306,
    -0.11726206815484841, -0.9945022839114583,
    0.08331354127766755, 0.2668615500972169,
    -0.34041092362538006, -0.19983465766196806,
    0.9414066593715746, -0.8402742925946292,
    0.6831584136301043, 0.007174288931512729};
inline const std::vector<double> k_a4 = {
    0.7236846938782806, 0.8178765780820636,
    -0.609553173357231, -0.7730119203250503,
    -0.4398632233410187, 0.9535371448758063,
    0.10247878277470623, 0.34145903818521584,
    -0.0764251964981959, 0.20197349133599052,
    0.12742675239692236, 0.7097267352030292,
    0.4137816620243362, 0.31948354043675753,
    -0.4752659082504056, 0.4671964506849142,
    -0.36510156058704735, 0.5040509412346521,
    -0.762735111954187, 0.1454961908018202,
    0.7509846927675954, 0.9845885223459907,
    0.8991788352046983, -0.35541976719954516,
    0.9045305334967988, 0.2108945466913077,
    -0.943577700074705, 0.2651746883467685,
    0.41265152583181286, 0.00834748615004477,
    0.14071150388906295, 0.4716945840517197,
    -0.9810146614516957, 0.027202585849043004,
    -0.5655108144164611, 0.7291264577508694,
    -0.6791016457222183, -0.7728162681955557,
    0.9474771554249215, 0.3208919926658369,
    -0.8270312788162095, 0.6319937147113583,
    -0.6092004766577499, -0.09146128563360567,
    0.7980996042314361, -0.4105981325701378,
    -0.6224478561498659, -0.26005163408047594,
    -0.9538528597852638, 0.6854625587502194,
    0.6598050496957393, 0.9111878897118597,
    -0.8438254339442264, 0.9328246638614268,
    -0.20670852677184626, -0.13329286038509736,
    0.7252662945688362, 0.422088427527596,
    0.8903316880499526, 0.4746279702203344,
    -0.20634298772713722, 0.8671902157741902,
    -0.049890200535820384, -0.9143639710139915,
    0.7819886591861469, -0.4138024600259882,
    -0.030625014472851486, -0.7361100305389114,
    0.6748120824705888, 0.8348059213611219,
    0.9583981956976524, -0.5210100130577646};
inline const std::vector<double> k_u = {
    0.5022845111350975, 0.7691577808660928,
    -0.5075809387360117, -0.11102225292559154,
    0.38661953590205456, -0.7576008553587716};
inline const std::vector<double> k_w = {
    0.8854144620568305, 0.5806478047650925,
    -0.44250592282478696, 0.7821538030888895,
    0.29202717992200644, -0.5525520214557704};
inline const std::vector<double> k_v4 = {
    0.14268418878070377, 0.5436095591089971,
    -0.8091241327333321, -0.3367822133710947,
    -0.7155969678009042, -0.7063755831372207,
    -0.4420045241453783, 0.27791245417055466,
    -0.24657271814103754, 0.3301593983494928,
    0.9512856712070921, 0.44849124779898175,
    -0.457327344862718, -0.3780669286759031,
    -0.12065878968950194, 0.1316279689358717,
    -0.3810992850768524, -0.4701399282854546,
    -0.3561212393823867, -0.7281461019439301,
    0.9691719451250835, 0.33282398405899394,
    0.8126745037786256, -0.7339971015511118};
inline const std::vector<double> k_h = {
    -0.48914916278961607, 0.9947899549524137,
    0.19873230318874757, 0.2732007163821757,
    -0.4049303614900126, 0.4063965320976992,
    0.018874363083637657, -0.8993173779947081,
    0.5158584940433979, -0.13410366259698514,
    0.14387496023226443, 0.6991036014499465};
inline constexpr double k_s = 0.09062611691738476;

struct Expected {
  std::string_view routine;
  std::vector<double> values;
};

inline const std::vector<Expected> kExpected = {
    {"add_su3_vector",
     {1.387698973191928, 1.3498055856311852,
    -0.9500868615607987, 0.671131550163298,
    0.678646715824061, -1.310152876814542}},
    {"mult_adj_su3_mat_hwvec",
     {0.6901362167374719, 1.0544198574856662,
    -0.03641362261193543, -0.24258207120817551,
    0.37866943925653246, -1.3695452036159121,
    -0.19263173595233382, -0.7138075262844351,
    0.6260477545114196, -0.4387777759631178,
    1.0428301084603608, -0.21839818918554663}},
    {"mult_adj_su3_mat_vec",
     {0.28703119782151165, 0.018995427943129625,
    -0.8147849121602165, 0.3895109030217239,
    -1.9587142929569994, 0.41442602664471795}},
    {"mult_adj_su3_mat_vec_4dir",
     {0.8205809886668145, -0.12923826941280817,
    -1.4220643455058808, 0.20986672386484292,
    -0.1540156416166093, -0.3894492884239505,
    -1.0566913546189791, -0.9420905917319284,
    1.1841255302149953, 1.0551383899694757,
    -0.8031354399965844, 0.9750927082954688,
    -1.5042322669828576, 0.3446746569611034,
    -0.07201814633388147, -0.581590162128878,
    -0.6174360939086068, -0.7378152544737729,
    0.34794598381766806, 0.6788334101764155,
    0.4442265413984437, -0.9467295548712895,
    1.2265354538325648, -0.3750997597803996}},
    {"mult_adj_su3_mat_4vec",
     {0.8205809886668145, -0.12923826941280817,
    -1.4220643455058808, 0.20986672386484292,
    -0.1540156416166093, -0.3894492884239505,
    -1.0566913546189791, -0.9420905917319284,
    1.1841255302149953, 1.0551383899694757,
    -0.8031354399965844, 0.9750927082954688,
    -1.5042322669828576, 0.3446746569611034,
    -0.07201814633388147, -0.581590162128878,
    -0.6174360939086068, -0.7378152544737729,
    0.34794598381766806, 0.6788334101764155,
    0.4442265413984437, -0.9467295548712895,
    1.2265354538325648, -0.3750997597803996}},
    {"mult_su3_an",
     {-0.3853423243572437, 0.02403054821231945,
    -0.18727993833729295, -0.7779067286983004,
    -0.456735106351068, -0.9549545440673765,
    0.12039421813504399, 0.32130609400599847,
    -1.5525558848759544, 0.02566709522167591,
    0.7092140538368277, -0.5445001894440961,
    0.5133190310653946, 0.7024888353559117,
    -2.4207177827546027, 0.1092871348803534,
    0.17999307334277842, 0.7014291786885875}},
    {"mult_su3_mat_hwvec",
     {-0.1379496899151612, 0.09013886958393791,
    -0.9628294061762542, 0.1216625909993246,
    -0.4799133485332935, -0.6531756220342941,
    0.9897342882721119, -1.4439342774025954,
    -0.6997349683768059, 0.5234813808404923,
    -0.03224138779955214, 0.19456284157848147}},
    {"mult_su3_na",
     {-0.015042942608014379, -1.1882549220351548,
    0.1721055880602791, 0.07848182576283176,
    -0.5120444030947577, -1.167046391033676,
    -0.8261791955564838, 1.1541829794576133,
    -0.6705968124654376, -0.6608090834273231,
    -1.2679633852530856, 1.0551783939784598,
    -0.8238289529396206, -0.08592932394598574,
    -0.6843113222934079, 0.16464437871377613,
    -1.0722653808169678, 1.0979371833398952}},
    {"mult_su3_nn",
     {0.36468747986284483, 0.22873384271386132,
    -1.825535448370669, 0.3826546078386657,
    0.4146861072307502, -0.8156178837059145,
    0.09060145893267751, -0.6065394532867726,
    2.045491475963789, 1.0821761801938419,
    -0.002714015029566268, 0.19559661418776503,
    0.4517911245122351, -0.15246031892603937,
    0.5943577839632636, 1.0673462630558876,
    -0.39026500831902644, 0.7942354482895633}},
    {"mult_su3_mat_vec",
     {-1.2367367095105204, 1.3465635794829955,
    1.2661931584727117, 0.00730117993287191,
    -0.1059673602964392, 0.3592802285380408}},
    {"mult_su3_mat_vec_sum_4dir",
     {3.7661235835824565, 2.1880680131917782,
    2.0539018003259675, -1.810021472718383,
    1.7227154175554558, 0.1462578253740978}},
    {"scalar_mult_add_su3_matrix",
     {0.5379568291316533, 0.6448432376364318,
    0.011891235161134113, -0.4898422034559006,
    -0.8089486372243406, -0.8984153525595626,
    0.327848082632535, 0.008592725290298482,
    -0.5605847142113939, 0.8472460859241765,
    0.2240875958133554, 0.8586874074312395,
    -0.18592155772503188, 0.349129368693396,
    0.1652262344066761, 0.7455263530360172,
    -0.583255058464966, 0.5987995256303269}},
    {"scalar_mult_add_su3_vector",
     {0.5825261856938032, 0.8217796367085568,
    -0.5476835322345661, -0.040138690919480705,
    0.41308482525272044, -0.8076764994581596}},
    {"su3_projector",
     {0.8913397472040473, 0.389373024024275,
    0.37933581235939184, -0.7332206142369758,
    -0.2783189573307079, 0.5021532996350152,
    -0.5138843312625665, 0.19642504946722011,
    0.13777109435040252, 0.446134366092726,
    -0.0868818598406328, -0.31288638918144906,
    -0.097580745150848, -0.8952805386021083,
    -0.7636418247586885, 0.03284692527912777,
    0.531517296857342, -0.00761263519994993}},
    {"sub_four_su3_vecs",
     {1.6150534307448767, 1.0538487982063742,
    -0.3003972432972237, -0.5688513908988553,
    -0.2806443862059065, 0.7044205098160337}},
};

}  // namespace frozen

#endif  // MILC_TESTS_SUPPORT_FROZEN_CASES_HPP_
