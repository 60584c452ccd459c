#pragma once

// Generated from assets/adf_pvalues.txt (version 1). Do not edit by hand;
// regenerate with tests/fixtures/generate_fixtures.py if the asset changes.

#include <array>

namespace causalpanel::detail {

inline constexpr double kAdfTauStart = -8.0;
inline constexpr double kAdfTauStep = 0.02;
inline constexpr int kAdfTauCount = 601;

inline constexpr std::array<double, kAdfTauCount> kAdfPvaluesNone = {
    3.28120667239e-13, 3.64492344114e-13, 4.04890392681e-13, 4.49759448873e-13, 4.99593074292e-13, 5.54939113996e-13,
    6.1640563746e-13, 6.84667525699e-13, 7.60473774306e-13, 8.44655589608e-13, 9.38135363396e-13, 1.04193662081e-12,
    1.157195046e-12, 1.28517070147e-12, 1.42726156906e-12, 1.58501855444e-12, 1.76016211189e-12, 1.95460066264e-12,
    2.17045099868e-12, 2.410060884e-12, 2.67603408769e-12, 2.97125810814e-12, 3.29893487469e-12, 3.66261474358e-12,
    4.06623413782e-12, 4.51415721788e-12, 5.01122201022e-12, 5.56279146554e-12, 6.17480996805e-12, 6.85386587133e-12,
    7.60726069648e-12, 8.44308569428e-12, 9.37030654631e-12, 1.03988570601e-11, 1.15397428023e-11, 1.28051557113e-11,
    1.42086008388e-11, 1.57650364877e-11, 1.74910291452e-11, 1.94049247532e-11, 2.15270380164e-11, 2.38798616242e-11,
    2.64882974521e-11, 2.93799120221e-11, 3.25852187328e-11, 3.6137989625e-11, 4.00755997317e-11, 4.44394073703e-11,
    4.92751740728e-11, 5.46335282285e-11, 6.05704769196e-11, 6.71479708864e-11, 7.44345280527e-11, 8.25059215882e-11,
    9.14459390846e-11, 1.01347220078e-10, 1.12312179876e-10, 1.24454028435e-10, 1.37897893915e-10, 1.52782061474e-10,
    1.69259338935e-10, 1.87498562094e-10, 2.07686253698e-10, 2.300284515e-10, 2.54752722335e-10, 2.82110380782e-10,
    3.12378932833e-10, 3.4586476695e-10, 3.82906117107e-10, 4.23876324756e-10, 4.69187429319e-10, 5.19294119639e-10,
    5.74698081953e-10, 6.35952783395e-10, 7.03668733767e-10, 7.78519272401e-10, 8.61246931453e-10, 9.52670431802e-10,
    1.05369237312e-09, 1.16530768553e-09, 1.28861291653e-09, 1.42481643402e-09, 1.57524963372e-09, 1.7413792475e-09,
    1.9248208585e-09, 2.12735373828e-09, 2.35093713261e-09, 2.59772813361e-09, 2.87010128927e-09, 3.1706701149e-09,
    3.50231068649e-09, 3.86818751232e-09, 4.27178189717e-09, 4.71692303314e-09, 5.20782207216e-09, 5.74910945862e-09,
    6.34587582561e-09, 7.00371678566e-09, 7.72878197651e-09, 8.52782875484e-09, 9.40828096592e-09, 1.03782932552e-08,
    1.14468214289e-08, 1.26236994167e-08, 1.39197234356e-08, 1.53467440105e-08, 1.69177665606e-08, 1.8647061325e-08,
    2.05502834667e-08, 2.26446042677e-08, 2.49488544059e-08, 2.74836803899e-08, 3.02717153193e-08, 3.33377652385e-08,
    3.67090124595e-08, 4.04152373435e-08, 4.44890601603e-08, 4.89662047762e-08, 5.38857860702e-08, 5.92906231355e-08,
    6.52275804924e-08, 7.1747939724e-08, 7.89078041434e-08, 8.67685393135e-08, 9.53972524723e-08, 1.0486731416e-07,
    1.15258925614e-07, 1.26659735785e-07, 1.39165512123e-07, 1.52880869636e-07, 1.67920063053e-07, 1.84407847321e-07,
    2.0248041207e-07, 2.2228639612e-07, 2.43987988574e-07, 2.67762123538e-07, 2.93801776073e-07, 3.22317367527e-07,
    3.53538289052e-07, 3.87714552742e-07, 4.25118580564e-07, 4.6604714199e-07, 5.10823452053e-07, 5.59799442429e-07,
    6.13358219051e-07, 6.71916720738e-07, 7.35928594411e-07, 8.05887303528e-07, 8.82329487608e-07, 9.65838591955e-07,
    1.05704878804e-06, 1.15664920646e-06, 1.26538850582e-06, 1.38407980273e-06, 1.51360598942e-06, 1.65492546777e-06,
    1.80907833013e-06, 1.97719301946e-06, 2.16049350349e-06, 2.36030699996e-06, 2.57807229219e-06, 2.81534867703e-06,
    3.07382558981e-06, 3.35533295374e-06, 3.66185230425e-06, 3.99552874198e-06, 4.35868377123e-06, 4.75382908442e-06,
    5.1836813567e-06, 5.65117811858e-06, 6.15949477873e-06, 6.71206287305e-06, 7.31258962092e-06, 7.96507887377e-06,
    8.67385354624e-06, 9.44357962532e-06, 1.02792918579e-05, 1.11864212227e-05, 1.21708242988e-05, 1.32388146484e-05,
    1.4397196337e-05, 1.56532997234e-05, 1.70150196542e-05, 1.84908562091e-05, 2.00899581463e-05, 2.18221692076e-05,
    2.36980774496e-05, 2.57290677737e-05, 2.79273778378e-05, 3.03061575404e-05, 3.28795322749e-05, 3.56626701608e-05,
    3.86718534708e-05, 4.19245544752e-05, 4.54395159407e-05, 4.9236836526e-05, 5.33380613266e-05, 5.77662778322e-05,
    6.25462175673e-05, 6.77043636976e-05, 7.32690648911e-05, 7.92706557363e-05, 8.57415840252e-05, 9.27165452205e-05,
    0.000100232624436, 0.000108329446265, 0.000117049332801, 0.000126437470213, 0.000136542084218, 0.000147414624841,
    0.000159109960823, 0.000171686584065, 0.000185206824491, 0.000199737075724, 0.000215348031976, 0.000232114936538,
    0.000250117842279, 0.000269441884558, 0.000290177566939, 0.000312421060112, 0.000336274514423, 0.000361846386384,
    0.000389251779568, 0.000418612800244, 0.000450058928124, 0.000483727402574, 0.00051976362462, 0.000558321575065,
    0.000599564249023, 0.00064366410713, 0.000690803543697, 0.000741175372016, 0.000794983327002, 0.000852442585337,
    0.000913780303223, 0.000979236171816, 0.00104906299037, 0.00112352725706, 0.00120290977744, 0.00128750629033,
    0.00137762811104, 0.00147360279156, 0.00157577479749, 0.00168450620118, 0.00180017739075, 0.00192318779424,
    0.00205395661844, 0.00219292360141, 0.00234054977807, 0.00249731825775, 0.00266373501275, 0.00284032967666,
    0.00302765635118, 0.00322629442015, 0.00343684936905, 0.0036599536085, 0.00389626729997, 0.00414647918165,
    0.00441130739255, 0.00469150029267, 0.00498783727674, 0.00530112957926, 0.00563222106804, 0.00598198902366,
    0.00635134490172, 0.00674123507506, 0.00715264155253, 0.00758658267111, 0.00804411375785, 0.008526327758,
    0.00903435582549, 0.00956936787207, 0.0101325730709, 0.0107252203103, 0.0113485985943, 0.012004037384,
    0.0126929068771, 0.0134166182196, 0.0141766236461, 0.0149744165434, 0.0158115314329, 0.0166895438671,
    0.0176100702352, 0.0185747674733, 0.0195853326743, 0.0206435025927, 0.0217510530396, 0.0229097981639,
    0.0241215896137, 0.0253883155755, 0.0267118996849, 0.0280942998069, 0.0295375066795, 0.0310435424187,
    0.0326144588807, 0.0342523358787, 0.0359592792497, 0.0377374187717, 0.0395889059256, 0.0415159115029,
    0.043520623056, 0.0456052421906, 0.0477719816996, 0.0500230625384, 0.0523607106422, 0.0547871535862,
    0.0573046170892, 0.0599153213648, 0.0626214773208, 0.0654252826114, 0.0683289175455, 0.0713345408557,
    0.074444285334, 0.0776602533396, 0.0809845121846, 0.0844190894068, 0.0879659679365, 0.0916270811656,
    0.0954043079297, 0.0992994674121, 0.103314313982, 0.107450531976, 0.111709730438, 0.116093437831,
    0.120603096723, 0.125240058485, 0.130005577986, 0.134900808325, 0.139926795603, 0.14508447375,
    0.150374659431, 0.155798047047, 0.161355203834, 0.167046565103, 0.17287242961, 0.178832955103,
    0.184928154031, 0.191157889466, 0.19752187123, 0.204019652261, 0.210650625222, 0.217414019384,
    0.224308897786, 0.231334154703, 0.238488513415, 0.245770524324, 0.253178563402, 0.260710831,
    0.268365351037, 0.280118708126, 0.288106112126, 0.296152614327, 0.304253889429, 0.312405607899,
    0.320603443596, 0.328843081149, 0.337120223036, 0.345430596393, 0.353769959507, 0.362134108013,
    0.37051888077, 0.378920165422, 0.387333903642, 0.395756096041, 0.40418280677, 0.412610167787,
    0.421034382811, 0.429451730957, 0.43785857006, 0.446251339695, 0.454626563887, 0.462980853541,
    0.471310908576, 0.479613519782, 0.487885570414, 0.496124037518, 0.504325993016, 0.512488604541,
    0.520609136045, 0.528684948196, 0.536713498551, 0.544692341539, 0.552619128257, 0.560491606083,
    0.568307618127, 0.576065102524, 0.583762091577, 0.591396710774, 0.598967177667, 0.606471800646,
    0.613908977599, 0.621277194479, 0.62857502378, 0.635801122939, 0.642954232658, 0.650033175175,
    0.657036852468, 0.663964244424, 0.670814406956, 0.677586470093, 0.684279636047, 0.690893177247,
    0.697426434372, 0.703878814365, 0.710249788448, 0.716538890134, 0.722745713248, 0.728869909955,
    0.734911188805, 0.740869312786, 0.746744097412, 0.752535408822, 0.75824316191, 0.763867318488,
    0.769407885474, 0.774864913118, 0.780238493261, 0.785528757632, 0.790735876186, 0.795860055478,
    0.800901537078, 0.805860596034, 0.810737539368, 0.815532704624, 0.820246458455, 0.824879195253,
    0.829431335827, 0.833903326121, 0.83829563598, 0.842608757955, 0.846843206156, 0.850999515142,
    0.855078238865, 0.859079949638, 0.863005237164, 0.866854707591, 0.870628982612, 0.874328698606,
    0.877954505811, 0.881507067544, 0.884987059443, 0.888395168758, 0.891732093664, 0.89499854262,
    0.898195233745, 0.901322894232, 0.904382259798, 0.907374074146, 0.910299088469, 0.913158060971,
    0.915951756414, 0.918680945694, 0.92134640543, 0.923948917577, 0.926489269066, 0.928968251447,
    0.931386660566, 0.933745296246, 0.936044961986, 0.938286464675, 0.940470614318, 0.942598223772,
    0.944670108491, 0.946687086284, 0.948649977079, 0.95055960269, 0.952416786596, 0.954222353719,
    0.955977130214, 0.957681943251, 0.95933762081, 0.960944991469, 0.962504884195, 0.964018128137,
    0.965485552418, 0.966907985919, 0.968286257066, 0.969621193616, 0.970913622434, 0.97216436927,
    0.973374258526, 0.974544113028, 0.975674753784, 0.97676699974, 0.977821667529, 0.978839571217,
    0.979821522041, 0.980768328141, 0.981680794284, 0.982559721589, 0.983405907239, 0.98422014419,
    0.985003220874, 0.9857559209, 0.986479022749, 0.987173299457, 0.987839518308, 0.988478440514,
    0.989090820894, 0.98967740755, 0.990238941548, 0.990776156586, 0.991289778677, 0.991780525816,
    0.992249107665, 0.992696225226, 0.993122570526, 0.993528826307, 0.993915665708, 0.994283751972,
    0.994633738143, 0.994966266782, 0.995281969685, 0.995581467609, 0.99586537002, 0.996134274837,
    0.996388768198, 0.996629424238, 0.996856804875, 0.997071459619, 0.99727392539, 0.997464726354,
    0.997644373777, 0.997813365895, 0.997972187799, 0.998121311348, 0.998261195086, 0.998392284192,
    0.998515010442, 0.998629792188, 0.998737034369, 0.998837128523, 0.998930452839, 0.999017372211,
    0.999098238323, 0.999173389748, 0.999243152065, 0.999307838002, 0.999367747584, 0.99942316831,
    0.999474375339, 0.999521631697, 0.999565188499, 0.999605285177, 0.999642149736, 0.999675999007,
    0.999707038926, 0.999735464812, 0.999761461659, 0.999785204442, 0.999806858419, 0.999826579448,
    0.999844514308, 0.999860801019, 0.999875569174, 0.999888940262, 0.999901028003, 0.999911938673,
    0.999921771433, 0.999930618658, 0.999938566256, 0.999945693991, 0.999952075792, 0.999957780068,
    0.999962870003, 0.999967403857, 0.999971435251, 0.999975013447, 0.999978183619, 0.999980987113,
    0.999983461701, 0.999985641824, 0.999987558822, 0.999989241158, 0.999990714632, 0.999992002579,
    0.999993126062, 0.999994104056, 0.999994953614, 0.999995690033, 0.999996327001, 0.999996876744,
    0.999997350152, 0.999997756907, 0.999998105595, 0.999998403814, 0.999998658268, 0.999998874865,
    0.999999058791, 0.999999214593, 0.999999346242, 0.999999457203, 0.999999550489, 0.999999628711,
    0.999999694132, 0.999999748699, 0.999999794092, 0.999999831749, 0.999999862903, 0.999999888603,
    0.999999909745
};

inline constexpr std::array<double, kAdfTauCount> kAdfPvaluesConst = {
    2.34784700895e-12, 2.63901510538e-12, 2.96612859321e-12, 3.33359972133e-12, 3.74637857601e-12, 4.21001809795e-12,
    4.73074688225e-12, 5.31555068231e-12, 5.9722636463e-12, 6.70967043457e-12, 7.53762050022e-12, 8.46715596395e-12,
    9.51065468042e-12, 1.06819902781e-11, 1.19967111608e-11, 1.34722406885e-11, 1.51281010104e-11, 1.69861633077e-11,
    1.90709275196e-11, 2.14098349795e-11, 2.40336177778e-11, 2.69766891066e-11, 3.0277579323e-11, 3.39794230085e-11,
    3.81305029004e-11, 4.27848572358e-11, 4.80029577886e-11, 5.38524667015e-11, 6.04090811253e-11, 6.77574756917e-11,
    7.59923539694e-11, 8.5219621298e-11, 9.55576927811e-11, 1.07138951751e-10, 1.20111375719e-10, 1.34640348717e-10,
    1.50910681014e-10, 1.69128859521e-10, 1.89525554754e-10, 2.12358413069e-10, 2.37915166033e-10, 2.66517092255e-10,
    2.98522870893e-10, 3.34332870276e-10, 3.74393919808e-10, 4.19204618533e-10, 4.69321239507e-10, 5.25364295456e-10,
    5.88025838273e-10, 6.58077572621e-10, 7.3637987253e-10, 8.23891799284e-10, 9.21682229371e-10, 1.03094221275e-09,
    1.15299869442e-09, 1.28932974619e-09, 1.44158147103e-09, 1.61158675947e-09, 1.80138609585e-09, 2.01325063332e-09,
    2.24970777869e-09, 2.51356955355e-09, 2.80796402508e-09, 3.13637013055e-09, 3.50265625226e-09, 3.91112293634e-09,
    4.36655018861e-09, 4.87424982469e-09, 5.44012339967e-09, 6.0707262955e-09, 6.77333860217e-09, 7.55604349233e-09,
    8.4278138585e-09, 9.39860805848e-09, 1.04794756977e-08, 1.16826744693e-08, 1.30217991714e-08, 1.45119241327e-08,
    1.61697603946e-08, 1.80138291296e-08, 2.00646529204e-08, 2.23449666763e-08, 2.48799501369e-08, 2.76974840973e-08,
    3.08284326909e-08, 3.43069542886e-08, 3.81708438112e-08, 4.24619095147e-08, 4.72263875943e-08, 5.25153982619e-08,
    5.8385447288e-08, 6.489897737e-08, 7.21249740814e-08, 8.01396315952e-08, 8.902708384e-08, 9.88802072595e-08,
    1.09801501899e-07, 1.21904058142e-07, 1.35312617063e-07, 1.50164733081e-07, 1.66612048341e-07, 1.8482168908e-07,
    2.04977795142e-07, 2.27283194725e-07, 2.51961237536e-07, 2.79257800598e-07, 3.09443482205e-07, 3.4281600079e-07,
    3.79702816907e-07, 4.20463998e-07, 4.65495347306e-07, 5.15231819948e-07, 5.70151251181e-07, 6.30778423754e-07,
    6.97689503543e-07, 7.71516874912e-07, 8.52954409772e-07, 9.42763206964e-07, 1.04177784147e-06, 1.15091316599e-06,
    1.27117171074e-06, 1.40365173075e-06, 1.54955595372e-06, 1.71020108555e-06, 1.88702813465e-06, 2.08161362096e-06,
    2.29568174026e-06, 2.53111755936e-06, 2.78998132348e-06, 3.07452396262e-06, 3.38720388991e-06, 3.73070519161e-06,
    4.10795731484e-06, 4.52215636695e-06, 4.97678814764e-06, 5.47565304319e-06, 6.02289292085e-06, 6.6230201701e-06,
    7.28094904738e-06, 8.00202949032e-06, 8.79208357854e-06, 9.65744482841e-06, 1.06050005212e-05, 1.16422372756e-05,
    1.27772900888e-05, 1.40189950818e-05, 1.53769462013e-05, 1.68615561404e-05, 1.84841217598e-05, 2.02568943027e-05,
    2.2193154714e-05, 2.43072943911e-05, 2.661490171e-05, 2.91328546874e-05, 3.18794201574e-05, 3.48743598617e-05,
    3.81390438672e-05, 4.1696571747e-05, 4.55719019807e-05, 4.97919900454e-05, 5.43859356949e-05, 5.9385139939e-05,
    6.48234722595e-05, 7.0737448617e-05, 7.71664208236e-05, 8.41527778779e-05, 9.17421598755e-05, 9.99836851319e-05,
    0.000108930191168, 0.000118638490233, 0.000129169640052, 0.000140589230497, 0.000152967686921, 0.000166380590864,
    0.000180909018893, 0.000196639900336, 0.000213666394662, 0.000232088289292, 0.00025201241861, 0.000273553104953,
    0.000296832622355, 0.000321981683816, 0.000349139952861, 0.00037845658012, 0.000410090765688, 0.000444212347953,
    0.000481002419584, 0.000520653971328, 0.000563372564234, 0.000609377030868, 0.000658900206049, 0.000712189687561,
    0.000769508627242, 0.000831136552794, 0.000897370220539, 0.000968524499308, 0.00104493328552, 0.00112695044939,
    0.00121495081221, 0.00130933115424, 0.00141051125304, 0.00151893495151, 0.00163507125499, 0.0017594154566,
    0.0018924902897, 0.00203484710633, 0.00218706708009, 0.00234976243204, 0.00252357767748, 0.00270919089187,
    0.00290731499327, 0.00311869903909, 0.00334412953395, 0.00358443174594, 0.00384047102771, 0.00411315413884,
    0.00440343056559, 0.00471229383374, 0.00504078281015, 0.00538998298808, 0.00576102775125, 0.00615509961114,
    0.00657343141184, 0.00701730749642, 0.00748806482835, 0.0079870940615, 0.00851584055155, 0.00907580530179,
    0.00966854583564, 0.0102956769881, 0.0109588716085, 0.0116598611651, 0.0124004362453, 0.0131824469399,
    0.0140078031052, 0.0148784744923, 0.0157964907354, 0.0167639411893, 0.0177829746073, 0.0188557986505,
    0.0199846792186, 0.0211719395943, 0.0224199593901, 0.0237311732925, 0.0251080695905, 0.0265531884837,
    0.0280691201605, 0.029658502639, 0.0313240193635, 0.03306839655, 0.0348944002753, 0.0368048333031,
    0.0388025316434, 0.0408903608411, 0.0430712119902, 0.0453479974722, 0.0477236464161, 0.050201099882,
    0.0527833057661, 0.0554732134318, 0.0582737680687, 0.0611879047837, 0.0642185424302, 0.0673685771827,
    0.0706408758648, 0.0740382690395, 0.0775635438752, 0.0812194367972, 0.0850086259409, 0.0889337234219,
    0.0929972674386, 0.0972017142283, 0.101549429894, 0.106042682127, 0.110683631843, 0.115474324759,
    0.120416682941, 0.125512496339, 0.130763414344, 0.1361709374, 0.141736408687, 0.147461005924,
    0.15334573331, 0.159391413641, 0.165598680638, 0.171967971515, 0.178499519824, 0.18519334861,
    0.192049263912, 0.199066848637, 0.206245456853, 0.213584208522, 0.221081984709, 0.228737423302,
    0.236548915274, 0.244514601502, 0.252632370196, 0.260899854943, 0.269314433391, 0.277873226616,
    0.286573099168, 0.295410659828, 0.304382263085, 0.313484011353, 0.322711757932, 0.33206111072,
    0.341527436692, 0.351105867125, 0.360791303592, 0.370578424707, 0.380461693607, 0.390435366175,
    0.400493499979, 0.410629963909, 0.420838448494, 0.431112476869, 0.441445416372, 0.451830490734,
    0.462260792823, 0.472729297921, 0.483593469654, 0.493631893723, 0.503649361814, 0.513639353859,
    0.523595449233, 0.53351133891, 0.543380837115, 0.553197892418, 0.562956598255, 0.572651202853,
    0.582276118523, 0.591825930309, 0.601295403979, 0.610679493341, 0.619973346876, 0.629172313681,
    0.638271948722, 0.64726801739, 0.656156499371, 0.664933591834, 0.673595711932, 0.682139498658,
    0.690561814033, 0.698859743666, 0.707030596702, 0.715071905165, 0.72298142273, 0.730757122947,
    0.738397196932, 0.745900050563, 0.753264301201, 0.760488773962, 0.767572497583, 0.774514699888,
    0.781314802909, 0.787972417671, 0.794487338686, 0.800859538175, 0.807089160054, 0.813176513718,
    0.819122067636, 0.8249264428, 0.830590406054, 0.836114863321, 0.841500852761, 0.846749537887,
    0.851862200657, 0.856840234563, 0.861685137755, 0.866398506192, 0.870982026874, 0.875437471139,
    0.879766688071, 0.883971598011, 0.888054186204, 0.892016496584, 0.895860625709, 0.899588716866,
    0.903202954345, 0.906705557894, 0.910098777364, 0.913384887549, 0.916566183224, 0.919644974389,
    0.922623581717, 0.925504332211, 0.928289555074, 0.930981577784, 0.933582722384, 0.936095301977,
    0.93852161743, 0.94086395428, 0.943124579844, 0.945305740527, 0.947409659321, 0.949438533495,
    0.951394532473, 0.953279795882, 0.955096431787, 0.956846515084, 0.95853208606, 0.960155149108,
    0.961717671593, 0.963221582864, 0.964668773399, 0.966061094084, 0.967400355616, 0.968688328029,
    0.969926740323, 0.971117280205, 0.972261593934, 0.973361286248, 0.974417920387, 0.975433018198,
    0.976408060312, 0.977344486395, 0.978243695461, 0.979107046252, 0.979935857661, 0.98073140922,
    0.98149494162, 0.982227657285, 0.98293072097, 0.983605260403, 0.98425236695, 0.984873096307,
    0.985468469214, 0.986039472189, 0.986587058276, 0.987112147805, 0.987615629166, 0.988098359583,
    0.988561165905, 0.989004845385, 0.989430166473, 0.989837869601, 0.990228667967, 0.990603248314,
    0.990962271701, 0.991306374276, 0.991636168026, 0.99195224153, 0.992255160696, 0.992545469485,
    0.992823690629, 0.993090326328, 0.993345858942, 0.993590751659, 0.993825449162, 0.994050378264,
    0.994265948548, 0.994472552971, 0.994670568469, 0.994860356538, 0.995042263803, 0.995216622564,
    0.995383751341, 0.995543955383, 0.995697527186, 0.995844746969, 0.995985883158, 0.996121192841,
    0.996250922213, 0.996375307006, 0.996494572903, 0.99660893594, 0.996718602894, 0.996823771657,
    0.996924631596, 0.997021363897, 0.997114141909, 0.997203131456, 0.997288491157, 0.997370372717,
    0.99744892122, 0.997524275405, 0.99759656793, 0.997665925626, 0.997732469746, 0.997796316201,
    0.997857575781, 0.997916354377, 0.997972753186, 0.998026868913, 0.99807879396, 0.99812861661,
    0.998176421205, 0.99822228831, 0.998266294876, 0.998308514395, 0.998349017047, 0.998387869838,
    0.99842513674, 0.998460878816, 0.998495154342, 0.998528018931, 0.998559525638, 0.99858972507,
    0.998618665491, 0.998646392914, 0.9986729512, 0.998698382141, 0.998722725547, 0.99874601933,
    0.998768299572, 0.998789600607, 0.998809955081, 0.998829394026, 0.998847946918, 0.998865641734,
    0.998882505015, 0.998898561911, 0.998913836236, 0.998928350513, 0.998942126021, 0.998955182835,
    0.998967539865, 0.998979214895, 0.998990224616, 0.999000584659, 0.999010309623, 0.999019413109,
    0.999027907738, 0.999035805178, 0.999043116168, 0.999049850534, 0.999056017208, 0.999061624243,
    0.999066678829, 0.999071187301, 0.999075155154, 0.999078587045, 0.999081486805, 0.999083857441,
    0.999085701137, 0.999087019256, 0.99908781234, 0.999088080104, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1
};

inline constexpr std::array<double, kAdfTauCount> kAdfPvaluesConstTrend = {
    7.14504526231e-11, 7.94778009047e-11, 8.84070791426e-11, 9.83394494705e-11, 1.09387379619e-10, 1.21675899349e-10,
    1.35343995444e-10, 1.50546160383e-10, 1.67454111455e-10, 1.8625869887e-10, 2.07172023426e-10, 2.30429786487e-10,
    2.56293897471e-10, 2.85055366732e-10, 3.17037514716e-10, 3.52599531533e-10, 3.9214042475e-10, 4.36103397193e-10,
    4.84980701008e-10, 5.39319019081e-10, 5.99725430375e-10, 6.66874021626e-10, 7.41513214481e-10, 8.24473884354e-10,
    9.16678355313e-10, 1.0191503641e-09, 1.13302609608e-09, 1.25956640669e-09, 1.40017035369e-09, 1.55639017843e-09,
    1.72994788897e-09, 1.9227536131e-09, 2.13692590728e-09, 2.37481422594e-09, 2.63902377712e-09, 2.93244301316e-09,
    3.25827403062e-09, 3.62006618142e-09, 4.02175322808e-09, 4.4676944092e-09, 4.96271981864e-09, 5.51218054226e-09,
    6.12200404062e-09, 6.7987553151e-09, 7.54970444825e-09, 8.38290116818e-09, 9.3072571513e-09, 1.03326368481e-08,
    1.14699576943e-08, 1.27313006545e-08, 1.41300321385e-08, 1.56809384302e-08, 1.74003738845e-08, 1.93064242634e-08,
    2.14190867204e-08, 2.3760468085e-08, 2.63550032581e-08, 2.92296957038e-08, 3.24143822106e-08, 3.59420243033e-08,
    3.98490289109e-08, 4.41756011432e-08, 4.89661322954e-08, 5.4269626493e-08, 6.01401697076e-08, 6.66374452191e-08,
    7.38272999799e-08, 8.17823667443e-08, 9.05827472728e-08, 1.00316762408e-07, 1.11081775345e-07, 1.22985094986e-07,
    1.36144966907e-07, 1.5069166011e-07, 1.66768658504e-07, 1.84533966803e-07, 2.04161541446e-07, 2.25842858017e-07,
    2.49788627689e-07, 2.76230676294e-07, 3.05424000797e-07, 3.37649019228e-07, 3.73214031499e-07, 4.12457910036e-07,
    4.55753040728e-07, 5.03508536456e-07, 5.56173747314e-07, 6.14242093634e-07, 6.78255250125e-07, 7.48807711704e-07,
    8.26551774175e-07, 9.1220296552e-07, 1.00654596653e-06, 1.11044106256e-06, 1.22483117152e-06, 1.35074949679e-06,
    1.48932785763e-06, 1.64180575355e-06, 1.80954022379e-06, 1.99401656738e-06, 2.19685999462e-06, 2.41984828577e-06,
    2.66492553878e-06, 2.93421709369e-06, 3.23004572804e-06, 3.5549492241e-06, 3.91169941659e-06, 4.30332283681e-06,
    4.73312307765e-06, 5.20470501261e-06, 5.72200101101e-06, 6.28929930183e-06, 6.91127464847e-06, 7.59302150792e-06,
    8.34008985944e-06, 9.15852389978e-06, 1.0054903815e-05, 1.10363908523e-05, 1.21107759295e-05, 1.32865320347e-05,
    1.45728706836e-05, 1.597980272e-05, 1.75182037596e-05, 1.91998845963e-05, 2.10376669098e-05, 2.30454646299e-05,
    2.52383713353e-05, 2.76327540838e-05, 3.02463540944e-05, 3.30983947205e-05, 3.62096971804e-05, 3.96028045316e-05,
    4.33021144014e-05, 4.73340210102e-05, 5.17270670495e-05, 5.6512106003e-05, 6.17224755238e-05, 6.73941825092e-05,
    7.35661005393e-05, 8.02801803753e-05, 8.75816742368e-05, 9.55193746075e-05, 0.000104145868344, 0.000113517806887,
    0.000123696193404, 0.000134746687713, 0.000146739929865, 0.000159751883283, 0.000173864198369, 0.000189164597544,
    0.000205747282639, 0.000223713365654, 0.000243171323836, 0.000264237480092, 0.000287036509738, 0.000311701974584,
    0.000338376885374, 0.000367214293572, 0.000398377913492, 0.000432042775748, 0.000468395912985, 0.000507637078811,
    0.000549979500839, 0.000595650668683, 0.000644893157725, 0.000697965489393, 0.000755143028647, 0.000816718919262,
    0.000883005057462, 0.000954333104297, 0.00103105553712, 0.00111354674036, 0.00120220413559, 0.00129744935102,
    0.00139972942991, 0.00150951807775, 0.0016273169475, 0.00175365696215, 0.00188909967361, 0.00203423865673,
    0.00218970093692, 0.00235614844978, 0.00253427953063, 0.00272483043172, 0.00292857686452, 0.00314633556418,
    0.00337896587301, 0.00362737133921, 0.00389250132711, 0.00417535263447, 0.00447697111215, 0.00479845328111,
    0.00514094794115, 0.00550565776546, 0.00589384087466, 0.00630681238357, 0.00674594591337, 0.00721267506162,
    0.00770849482192, 0.00823496294487, 0.00879370123109, 0.00938639674722, 0.0100148029549, 0.0106807407426,
    0.01138609935, 0.0121328371734, 0.0129229824414, 0.0137586337495, 0.0146419604412, 0.0155752028235,
    0.0165606722057, 0.0176007507476, 0.0186978911051, 0.0198546158617, 0.0210735167316, 0.0223572535231,
    0.0237085528497, 0.0251302065763, 0.02662506999, 0.0281960596818, 0.0298461511305, 0.0315783759766,
    0.0333958189767, 0.0353016146299, 0.0372989434666, 0.0393910279932, 0.0415811282855, 0.0438725372252,
    0.0462685753762, 0.0487725854964, 0.0513879266841, 0.0541179681585, 0.0569660826764, 0.0599356395863,
    0.0630299975273, 0.0662524967763, 0.0696064512548, 0.0730951402035, 0.0767217995384, 0.0804896129019,
    0.0844017024265, 0.088461119229, 0.0926708336557, 0.0970337253031, 0.101552572838, 0.106230043645,
    0.111068683329, 0.11607090511, 0.121238979136, 0.126575021755, 0.13208098478, 0.137758644794,
    0.143609592524, 0.149635222334, 0.155836721884, 0.16221506199, 0.169112753265, 0.175780217527,
    0.182641004167, 0.189695671332, 0.196944442311, 0.20438719164, 0.212023432044, 0.219852302345,
    0.227872556435, 0.236082553411, 0.244480248987, 0.253063188262, 0.261828499954, 0.270772892165,
    0.279892649778, 0.289183633525, 0.298641280821, 0.308260608379, 0.318036216678, 0.327962296286,
    0.338032636073, 0.348240633306, 0.358579305627, 0.369041304877, 0.379618932751, 0.390304158215,
    0.401088636641, 0.411963730568, 0.422920532017, 0.433949886251, 0.445042416868, 0.456188552112,
    0.467378552267, 0.478602537989, 0.489850519433, 0.501112426017, 0.512378136662, 0.523637510348,
    0.534880416808, 0.5460967672, 0.557276544584, 0.568409834037, 0.579486852244, 0.590497976394,
    0.60143377224, 0.612285021162, 0.623042746097, 0.633698236214, 0.644243070184, 0.654669137975,
    0.664968661032, 0.675134210784, 0.685158725391, 0.695035524672, 0.704758323169, 0.714321241312,
    0.72371881466, 0.732946001224, 0.741998186862, 0.750871188774, 0.759561257138, 0.768065074902,
    0.776379755819, 0.784502840767, 0.792432292431, 0.800166488439, 0.807704213028, 0.815044647344,
    0.822187358478, 0.829132287334, 0.835879735447, 0.842430350866, 0.848785113197, 0.85494531794,
    0.860912560218, 0.866688718018, 0.872275935051, 0.877676603328, 0.882893345576, 0.88792899757,
    0.892786590487, 0.897469333374, 0.9019805958, 0.906323890783, 0.910502858054, 0.914521247729,
    0.918382904446, 0.922091752012, 0.92565177862, 0.929067022662, 0.932341559178, 0.935479486966,
    0.938484916379, 0.941361957811, 0.944114710902, 0.946747254454, 0.949263637057, 0.951667868434,
    0.953963911486, 0.956155675028, 0.958247007208, 0.96024168958, 0.962143431821, 0.963955867068,
    0.965682547849, 0.967326942577, 0.96889243259, 0.97038230971, 0.971799774276, 0.973147933642,
    0.974429801102, 0.975648295206, 0.976806239456, 0.977906362335, 0.978951297648, 0.979943585158,
    0.98088567147, 0.981779911156, 0.982628568088, 0.98343381695, 0.984197744929, 0.984922353527,
    0.985609560513, 0.986261201969, 0.986879034424, 0.987464737057, 0.988019913953, 0.988546096401,
    0.989044745214, 0.989517253071, 0.989964946855, 0.990389089991, 0.990790884766, 0.991171474628,
    0.991531946454, 0.991873332782, 0.992196614004, 0.992502720507, 0.992792534772, 0.993066893408,
    0.993326589143, 0.993572372742, 0.993804954877, 0.994025007922, 0.994233167695, 0.99443003513,
    0.994616177889, 0.994792131902, 0.994958402853, 0.995115467592, 0.99526377549, 0.99540374973,
    0.995535788534, 0.995660266331, 0.995777534867, 0.995887924249, 0.99599174394, 0.996089283696,
    0.996180814438, 0.996266589084, 0.996346843321, 0.99642179632, 0.996491651409, 0.996556596692,
    0.996616805619, 0.996672437506, 0.996723638008, 0.996770539548, 0.996813261696, 0.996851911499,
    0.996886583771, 0.996917361332, 0.996944315202, 0.996967504743, 0.996986977764, 0.997002770567,
    0.997014907949, 0.997023403151, 0.997028257753, 0.997029461522, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1, 1, 1, 1, 1, 1,
    1
};

}  // namespace causalpanel::detail
