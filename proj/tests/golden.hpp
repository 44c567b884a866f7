#pragma once
// Generated by gen_golden.py; do not edit.
#include <vector>

namespace golden {

inline const std::vector<double> kDb6DecLo = {
    -0.0010773010853084796, 0.0047772575109455108, 0.00055384220116149613, -0.03158203931748603,
    0.027522865530305727, 0.097501605587323043, -0.12976686756726194, -0.22626469396543983,
    0.31525035170919763, 0.75113390802109536, 0.49462389039845306, 0.11154074335010947};
inline const std::vector<double> kDb6DecHi = {
    -0.11154074335010947, 0.49462389039845306, -0.75113390802109536, 0.31525035170919763,
    0.22626469396543983, -0.12976686756726194, -0.097501605587323043, 0.027522865530305727,
    0.03158203931748603, 0.00055384220116149613, -0.0047772575109455108, -0.0010773010853084796};
inline const std::vector<double> kDb6RecLo = {
    0.11154074335010947, 0.49462389039845306, 0.75113390802109536, 0.31525035170919763,
    -0.22626469396543983, -0.12976686756726194, 0.097501605587323043, 0.027522865530305727,
    -0.03158203931748603, 0.00055384220116149613, 0.0047772575109455108, -0.0010773010853084796};
inline const std::vector<double> kDb6RecHi = {
    -0.0010773010853084796, -0.0047772575109455108, 0.00055384220116149613, 0.03158203931748603,
    0.027522865530305727, -0.097501605587323043, -0.12976686756726194, 0.22626469396543983,
    0.31525035170919763, -0.75113390802109536, 0.49462389039845306, -0.11154074335010947};
inline const std::vector<double> kDwtInput = {
    -3, 19.100640298838609, 36.287298717150506, 42.730795929484906,
    49.840262699135231, 52.305276617354124, 40.447801012760664, 26.423969566252794,
    14.851024343744886, -4.7813059637758011, -24.457920899984678, -32.598938995543158,
    -38.88555690006109, -44.035450081726715, -35.142441972723653, -19.288057036651129,
    -6.543175892289959, 12.888713135017305, 37.408329133977233, 52.100167805299677,
    62.070183858439464, 73.641437607211884, 73.891032578936333, 63.190104277252416,
    54.852078268189949, 42.734775511625543, 22.155963404883821, 8.1370111086307713,
    1.899363894041616, -6.5625720935937508, -7.4272298911070358, 5.683219971364359,
    19.326648097713342, 34.032280585608568, 59.069664332616647, 82.558056679514763,
    96.749288056285437, 112.40479067384449, 125.04639611260382, 123.11386561658964,
    116.93960937544314, 112.07601646177487, 97.475657499376126, 79.417265905431179,
    70.755193324403351, 63.150486644860173, 54.93017681978646, 60.05937323693847,
    73.865735985630479, 85.865923309407975, 105.68544839353491, 133.72001706227854,
    154.70840940800502, 171.95492039764449, 192.46371601383575, 203.15659763809384,
    201.82565048190847, 201.3974846528659, 196.43715205299202, 180.44497291859548,
    167.77461713198443, 161.52619291721265, 151.59182998564407, 147.18033196620695};
inline const std::vector<double> kDwtApprox = {
    104.43888123381653, 127.31775952375136, 126.75989523266109, 122.91028752630163,
    108.62655601656193, 120.334218445025, 123.83506921257198, 144.90937702287511,
    80.621735594946216, 52.406615608139035, 154.87992839037796, 528.90273663187543,
    555.16008239292864, 672.03922145103229};
inline const std::vector<double> kDwtDetail4 = {
    3.9701856677091834, -0.7103196537796167, 28.010499656645475, 25.53267587956022,
    35.37509878252677, 172.24310459097745, 143.88040266055131, 127.63474411898115,
    -71.061021678375667, 63.918730342546624, -131.42820526161492, -155.87202759713963,
    -150.34698285023649, -49.589160048429527};
inline const std::vector<double> kDwtDetail3 = {
    -13.524807047651128, 2.410347775351259, -52.071716465947503, -51.981153701819444,
    0.41071089246892645, 33.165025865856606, -42.032645862821134, 35.33841053431474,
    -21.340595173469719, 5.7201257204050089, 10.458267551357881, -11.826528748079014,
    6.2880564302131505, 15.332306918348598, -51.965217383726909, 74.27624587452398,
    -85.174069600550283};
inline const std::vector<double> kDwtDetail2 = {
    21.059237278294681, -20.017158830999289, 0.51099043066158256, -7.4017974047794013,
    -0.16936472535493527, 7.5231683206078301, -2.5324542469622222, -5.5068261334017068,
    0.32927424236366853, 5.7055644614462935, 1.3990953705085274, -5.2558044247784546,
    -2.9473883007929391, 4.2261780906792046, 4.060149174309637, -2.8207013320848469,
    -4.6228971102031906, 0.32393050709651333, 2.3712640695148011, -2.9078847417632434,
    3.6088789177998444, -1.2784957049821406, 3.7724408791261723, -0.77117621243483625};
inline const std::vector<double> kDwtDetail1 = {
    5.1323549588722148, -6.2486399324619937, 4.5656041614901905, -3.8058924002790753,
    3.5771879757162113, -1.9046387293320519, -0.58204744806240027, 2.8130694566770549,
    -3.9896820264085693, 3.3310330024247219, -1.4052783199577059, -1.1259844831466181,
    3.2853931357080546, -3.9072446108231604, 3.0390279996924656, -0.85254091563465695,
    -1.7632365158354575, 3.4864775799275409, -3.9087734094001791, 2.6210101575659515,
    -0.19302556068054016, -2.1740376390797214, 3.796904557901946, -3.7307992321035384,
    2.090374816090228, 0.30077098831605753, -2.7335152934041762, 3.8995130116721204,
    -3.4510043998738515, 1.6604639380086839, 0.98874318106323134, -3.0823678957344391,
    1.0108596862974086, 0.84064786003406056, 1.3848982672616197, -3.5101212600030798,
    4.0321467699943954};
inline const std::vector<double> kWelchInput = {
    -3, 19.100640298838609, 36.287298717150506, 42.730795929484906,
    49.840262699135231, 52.305276617354124, 40.447801012760664, 26.423969566252794,
    14.851024343744886, -4.7813059637758011, -24.457920899984678, -32.598938995543158,
    -38.88555690006109, -44.035450081726715, -35.142441972723653, -19.288057036651129,
    -6.543175892289959, 12.888713135017305, 37.408329133977233, 52.100167805299677,
    62.070183858439464, 73.641437607211884, 73.891032578936333, 63.190104277252416,
    54.852078268189949, 42.734775511625543, 22.155963404883821, 8.1370111086307713,
    1.899363894041616, -6.5625720935937508, -7.4272298911070358, 5.683219971364359,
    19.326648097713342, 34.032280585608568, 59.069664332616647, 82.558056679514763,
    96.749288056285437, 112.40479067384449, 125.04639611260382, 123.11386561658964,
    116.93960937544314, 112.07601646177487, 97.475657499376126, 79.417265905431179,
    70.755193324403351, 63.150486644860173, 54.93017681978646, 60.05937323693847,
    73.865735985630479, 85.865923309407975, 105.68544839353491, 133.72001706227854,
    154.70840940800502, 171.95492039764449, 192.46371601383575, 203.15659763809384,
    201.82565048190847, 201.3974846528659, 196.43715205299202, 180.44497291859548,
    167.77461713198443, 161.52619291721265, 151.59182998564407, 147.18033196620695,
    156.96043260186002, 168.76400412518157, 182.20820016591026, 207.84284502409639,
    235.33210429218624, 255.40765613913339, 278.22361675140183, 300.37113627209942,
    308.67834160351254, 311.44552938586338, 314.93985454852429, 307.56633144313759,
    293.50531853770485, 286.3928936782961, 279.12742538841184, 268.91370619931934,
    270.41758045396739, 281.4371350662023, 291.33727094145218, 309.57204448714879,
    338.75729471853197, 363.81701021106147, 386.46042401433925, 414.47742198050418,
    435.01937890885353, 443.40576428155953, 451.92112113305274, 455.80646323663115,
    446.65410528565906, 437.64719930285429, 433.44114430439197, 423.75227950355287,
    416.82205857447838, 423.34552922497852, 432.62176781658042, 443.44296967705719,
    467.62417275709493, 496.78682824914318, 520.56964390486064, 548.60672343472436,
    578.84291512515142, 596.87971991521044, 608.90755284011777, 621.76686695431954,
    623.38916696850924, 615.57927039014828, 612.26400261522122, 607.43283453446816,
    596.96856882219151, 595.78973909318086, 604.09065131477439, 611.25287182467218,
    626.47709703141118, 654.72340267672314, 681.59657281787008, 707.44767187609727,
    740.98025909145235, 770.02252166988444, 787.65741088637867, 805.3786853721034,
    819.15144437045512, 818.67709492818062, 815.53362413710136, 815.59604257298975,
    808.31398249899314, 800.57092152394557, 804.71039337944057, 811.57368679557237,
    819.13463766453572, 840.3523556020325, 869.1219691226695, 894.4038637845141,
    925.41171795802939, 961.74253660089971, 988.24431351224882, 1009.0434515468744,
    1031.4977087669033, 1043.2382758173333, 1043.5326264547634, 1046.1495938719559,
    1046.0186393780368, 1037.5026842718962, 1035.2671447417281, 1041.7083047719611,
    1046.2996501629857, 1057.8162591477026, 1083.5620488806603, 1110.2448573417914,
    1137.0871595233498, 1173.8221871819344, 1209.4286066646393, 1235.0950550040259,
    1261.4767945378762, 1285.3940252262139, 1294.7978965811667, 1299.3281601969454,
    1305.7693055878244, 1303.2313759840515, 1296.8510966526858, 1300.1601281853661,
    1305.5114018467252, 1309.9881686968106, 1327.457941302629, 1354.282958471028,
    1379.110697576547, 1410.8110225245089, 1450.9074296818096, 1484.0193789579587,
    1512.3587032630974, 1543.8230329921857, 1566.0171458623499, 1575.6439364181701,
    1585.94154302984, 1592.6581370053511, 1588.4780110789557, 1587.2896929390965,
    1593.4045270854635, 1596.3824051538572, 1604.3147394656417, 1626.713630592965,
    1651.7099112784056, 1677.586131550323, 1715.1736632778632, 1755.0605545478977,
    1786.9555854697987, 1820.7105659173551, 1854.2047675503004, 1873.9056349691282,
    1887.305569217998, 1901.8454921300875, 1906.2744494602175, 1903.6360748642871,
    1908.1461794100569, 1913.5575408026668, 1915.9265254701143, 1929.6842890139033};
inline const std::vector<double> kWelchDensity = {
    38553.472335337465, 26574.170365017773, 703.76461141919424, 37.908425787450192,
    5.8483764350627556, 1.4631074115985694, 0.50234286364920833, 0.24004181378265754,
    0.24281686752654807, 2.6761561510567393, 91.290507789049258, 123.44407328820412,
    7.2803609476558719, 0.0794865940136599, 0.0057201226305722613, 0.0011238073406957198,
    0.00058890360179833328, 0.00044440509000264454, 0.00035203743303369319, 0.00027757542942147484,
    0.00021755280429349764, 0.00017023602037095805, 0.00013346227239773164, 0.00010505719705043446,
    8.3134352836895952e-05, 6.6173984719226358e-05, 5.2996672845798831e-05, 4.2703883112908343e-05,
    3.4616650859256541e-05, 2.8223102305583547e-05, 2.3136878640254483e-05, 1.9065402336082447e-05,
    1.5786101451331058e-05, 1.31287491361897e-05, 1.0962382716304863e-05, 9.185607242733586e-06,
    7.7193839413911973e-06, 6.5016372196399564e-06, 5.4831892971221971e-06, 4.6246595775116436e-06,
    3.8940571392584655e-06, 3.2648584149818027e-06, 2.7144076104294212e-06, 2.2225210453889905e-06,
    1.7702672849711675e-06, 1.3392134961804636e-06, 9.1270720459296737e-07, 4.8624847669815852e-07,
    1.199840158050617e-07, 2.0975744874789322e-07, 3.1501727018127767e-06, 2.7493357649605308e-05,
    0.00033330489470370758, 0.022961567585354191, 0.42472839282371411, 0.35157688026138978,
    0.010057578388227805, 0.00027319082367940201, 3.6783924075087849e-05, 9.5641389225013308e-06,
    3.6520134982200824e-06, 1.7912909949650406e-06, 1.0408710603392326e-06, 6.7940916502230143e-07,
    4.8060357914365961e-07, 3.5954894049373406e-07, 2.7975334986862511e-07, 2.2377040715233521e-07,
    1.8251370795361821e-07, 1.509059162924012e-07, 1.2593750261494914e-07, 1.057325716493114e-07,
    8.9069870350326151e-08, 7.5123568723692509e-08, 6.3316303743781732e-08, 5.3232424776332013e-08,
    4.4564919343389155e-08, 3.708189746919764e-08, 3.0604816719993473e-08, 2.4993968054787572e-08,
    2.0138574994505773e-08, 1.5949897688210234e-08, 1.2356340067630966e-08, 9.2999217427807328e-09,
    6.7336999326531313e-09, 4.6198666748143007e-09, 2.9283368076981329e-09, 1.6357012011532147e-09,
    7.2445925479705029e-10, 1.8247189091691126e-10, 1.2977724982711639e-12};

}  // namespace golden
