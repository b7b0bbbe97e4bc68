// Generated by tests/tools/make_reference_tables.py -- do not edit.
// Extended-precision (mpmath, >=260 bit) reference values.
#pragma once

#include <cstddef>

namespace fdw_ref {

struct MlPoint { double alpha, beta, eta, value; };

inline constexpr MlPoint kMlGrid[] = {
    {1.1, 1.0, 0.0, 1.0},
    {1.1, 1.0, 0.01, 0.9904853510459716},
    {1.1, 1.0, 0.018116091942004142, 0.9828233672205907},
    {1.1, 1.0, 0.03281927872511474, 0.9690789738505937},
    {1.1, 1.0, 0.05945570708544391, 0.9446202588423022},
    {1.1, 1.0, 0.10771050560367691, 0.9017221344404227},
    {1.1, 1.0, 0.19512934226359632, 0.8284389478681228},
    {1.1, 1.0, 0.35349811050301055, 0.7091003017500623},
    {1.1, 1.0, 0.640400427119728, 0.5310044899385611},
    {1.1, 1.0, 1.1601553017399715, 0.3045866323126828},
    {1.1, 1.0, 2.1017480113324893, 0.09141167317632636},
    {1.1, 1.0, 3.807546021222372, -0.018076318002433027},
    {1.1, 1.0, 6.897785379387658, -0.022578775940954893},
    {1.1, 1.0, 12.496091412919867, -0.00949789230566811},
    {1.1, 1.0, 22.63803409521449, -0.004611004964679149},
    {1.1, 1.0, 41.011270705513, -0.0024155975663578766},
    {1.1, 1.0, 74.2963950759495, -0.0012986601615665833},
    {1.1, 1.0, 134.59603241553643, -0.0007069221060832006},
    {1.1, 1.0, 243.83540982688265, -0.0003872904993012044},
    {1.1, 1.0, 441.73447031400735, -0.00021290645707156033},
    {1.1, 1.0, 800.2502278161052, -0.00011725902031064265},
    {1.1, 1.0, 1449.7406703726315, -6.464631787225451e-05},
    {1.1, 1.0, 2626.36352765333, -3.566012932725658e-05},
    {1.1, 1.0, 4757.944314009414, -1.9676823209052106e-05},
    {1.1, 1.0, 8619.535664753032, -1.0859262151203655e-05},
    {1.1, 1.0, 15615.230060004966, -5.993576533530515e-06},
    {1.1, 1.0, 28288.694346259665, -3.308217727978627e-06},
    {1.1, 1.0, 51248.058769609364, -1.8260573589080795e-06},
    {1.1, 1.0, 92841.45445194744, -1.0079559084985205e-06},
    {1.1, 1.0, 168192.4324880869, -5.563811426018334e-07},
    {1.1, 1.0, 304698.9570903505, -3.0711804708811284e-07},
    {1.1, 1.0, 551995.4321281574, -1.695272100110375e-07},
    {1.1, 1.0, 1000000.0, -9.357807823686293e-08},
    {1.1, 2.0, 0.0, 1.0},
    {1.1, 2.0, 0.01, 0.9954624892275219},
    {1.1, 2.0, 0.018116091942004142, 0.9917986510633651},
    {1.1, 2.0, 0.03281927872511474, 0.9852039299233528},
    {1.1, 2.0, 0.05945570708544391, 0.9733956790014496},
    {1.1, 2.0, 0.10771050560367691, 0.9524510807029676},
    {1.1, 2.0, 0.19512934226359632, 0.9159282804758258},
    {1.1, 2.0, 0.35349811050301055, 0.8541570474075797},
    {1.1, 2.0, 0.640400427119728, 0.7552130648886923},
    {1.1, 2.0, 1.1601553017399715, 0.6111257744462272},
    {1.1, 2.0, 2.1017480113324893, 0.4325545612929481},
    {1.1, 2.0, 3.807546021222372, 0.2606979013442721},
    {1.1, 2.0, 6.897785379387658, 0.1412679308426926},
    {1.1, 2.0, 12.496091412919867, 0.07620845480209149},
    {1.1, 2.0, 22.63803409521449, 0.0417019143349523},
    {1.1, 2.0, 41.011270705513, 0.022924447441146745},
    {1.1, 2.0, 74.2963950759495, 0.012627095446571004},
    {1.1, 2.0, 134.59603241553643, 0.006962107196623487},
    {1.1, 2.0, 243.83540982688265, 0.003840657762564152},
    {1.1, 2.0, 441.73447031400735, 0.0021193029456627955},
    {1.1, 2.0, 800.2502278161052, 0.0011696264823394871},
    {1.1, 2.0, 1449.7406703726315, 0.0006455619122458528},
    {1.1, 2.0, 2626.36352765333, 0.0003563269758779084},
    {1.1, 2.0, 4757.944314009414, 0.00019668469780555217},
    {1.1, 2.0, 8619.535664753032, 0.0001085671770918718},
    {1.1, 2.0, 15615.230060004966, 5.9928013857112085e-05},
    {1.1, 2.0, 28288.694346259665, 3.307981564954599e-05},
    {1.1, 2.0, 51248.058769609364, 1.8259854042676788e-05},
    {1.1, 2.0, 92841.45445194744, 1.0079339846650951e-05},
    {1.1, 2.0, 168192.4324880869, 5.563744625454131e-06},
    {1.1, 2.0, 304698.9570903505, 3.0711601170085296e-06},
    {1.1, 2.0, 551995.4321281574, 1.695265898338518e-06},
    {1.1, 2.0, 1000000.0, 9.35778892700577e-07},
    {1.1, 1.1, 0.0, 1.0511370061117777},
    {1.1, 1.1, 0.01, 1.0420981364388644},
    {1.1, 1.1, 0.018116091942004142, 1.0348164929286943},
    {1.1, 1.1, 0.03281927872511474, 1.021748032413455},
    {1.1, 1.1, 0.05945570708544391, 0.9984716218223302},
    {1.1, 1.1, 0.10771050560367691, 0.9575811938092648},
    {1.1, 1.1, 0.19512934226359632, 0.887519866540899},
    {1.1, 1.1, 0.35349811050301055, 0.7727932583989296},
    {1.1, 1.1, 0.640400427119728, 0.5997514775455698},
    {1.1, 1.1, 1.1601553017399715, 0.37499735615978785},
    {1.1, 1.1, 2.1017480113324893, 0.1529649565222819},
    {1.1, 1.1, 3.807546021222372, 0.021602825345964593},
    {1.1, 1.1, 6.897785379387658, -0.004360511427552454},
    {1.1, 1.1, 12.496091412919867, -0.001150422985992074},
    {1.1, 1.1, 22.63803409521449, -0.0002519237267381401},
    {1.1, 1.1, 41.011270705513, -6.872208818169294e-05},
    {1.1, 1.1, 74.2963950759495, -1.9835170021300592e-05},
    {1.1, 1.1, 134.59603241553643, -5.875265537136601e-06},
    {1.1, 1.1, 243.83540982688265, -1.7632438547497973e-06},
    {1.1, 1.1, 441.73447031400735, -5.328475006844715e-07},
    {1.1, 1.1, 800.2502278161052, -1.6162695022295045e-07},
    {1.1, 1.1, 1449.7406703726315, -4.912557342757404e-08},
    {1.1, 1.1, 2626.36352765333, -1.4948083236393068e-08},
    {1.1, 1.1, 4757.944314009414, -4.5512378830471354e-09},
    {1.1, 1.1, 8619.535664753032, -1.3861817269524984e-09},
    {1.1, 1.1, 15615.230060004966, -4.222713677607224e-10},
    {1.1, 1.1, 28288.694346259665, -1.2864937787468855e-10},
    {1.1, 1.1, 51248.058769609364, -3.9196595812552553e-11},
    {1.1, 1.1, 92841.45445194744, -1.1942701839414029e-11},
    {1.1, 1.1, 168192.4324880869, -3.63885142766988e-12},
    {1.1, 1.1, 304698.9570903505, -1.1087412228561182e-12},
    {1.1, 1.1, 551995.4321281574, -3.3783010578571544e-13},
    {1.1, 1.1, 1000000.0, -1.0293611282144258e-13},
    {1.5, 1.0, 0.0, 1.0},
    {1.5, 1.0, 0.01, 0.9924941197950792},
    {1.5, 1.0, 0.018116091942004142, 0.9864267048671723},
    {1.5, 1.0, 0.03281927872511474, 0.9754904501707256},
    {1.5, 1.0, 0.05945570708544391, 0.9558594446392423},
    {1.5, 1.0, 0.10771050560367691, 0.9208843774395069},
    {1.5, 1.0, 0.19512934226359632, 0.8594193717410723},
    {1.5, 1.0, 0.35349811050301055, 0.7540842568742164},
    {1.5, 1.0, 0.640400427119728, 0.5818176062369813},
    {1.5, 1.0, 1.1601553017399715, 0.3241368920466102},
    {1.5, 1.0, 2.1017480113324893, 0.0022084648868960152},
    {1.5, 1.0, 3.807546021222372, -0.2601846756913482},
    {1.5, 1.0, 6.897785379387658, -0.25378598599555624},
    {1.5, 1.0, 12.496091412919867, -0.025759855582383914},
    {1.5, 1.0, 22.63803409521449, 0.007258714735618488},
    {1.5, 1.0, 41.011270705513, -0.009066226777913976},
    {1.5, 1.0, 74.2963950759495, -0.003966367778941291},
    {1.5, 1.0, 134.59603241553643, -0.0020962831416016896},
    {1.5, 1.0, 243.83540982688265, -0.001156655126955385},
    {1.5, 1.0, 441.73447031400735, -0.0006385642317102451},
    {1.5, 1.0, 800.2502278161052, -0.00035250100767222355},
    {1.5, 1.0, 1449.7406703726315, -0.00019458171799103757},
    {1.5, 1.0, 2626.36352765333, -0.00010740868583139923},
    {1.5, 1.0, 4757.944314009414, -5.928918238755019e-05},
    {1.5, 1.0, 8619.535664753032, -3.272737104545254e-05},
    {1.5, 1.0, 15615.230060004966, -1.806536154161532e-05},
    {1.5, 1.0, 28288.694346259665, -9.971997423928728e-06},
    {1.5, 1.0, 51248.058769609364, -5.504497089974103e-06},
    {1.5, 1.0, 92841.45445194744, -3.0384572603861667e-06},
    {1.5, 1.0, 168192.4324880869, -1.677214530225529e-06},
    {1.5, 1.0, 304698.9570903505, -9.258147596821297e-07},
    {1.5, 1.0, 551995.4321281574, -5.110455183915953e-07},
    {1.5, 1.0, 1000000.0, -2.8209479177017563e-07},
    {1.5, 2.0, 0.0, 1.0},
    {1.5, 2.0, 0.01, 0.9969951520827893},
    {1.5, 2.0, 0.018116091942004142, 0.9945625018718423},
    {1.5, 2.0, 0.03281927872511474, 0.9901693993778878},
    {1.5, 2.0, 0.05945570708544391, 0.9822562749574079},
    {1.5, 2.0, 0.10771050560367691, 0.9680688731503629},
    {1.5, 2.0, 0.19512934226359632, 0.9428463192401095},
    {1.5, 2.0, 0.35349811050301055, 0.8986883418628278},
    {1.5, 2.0, 0.640400427119728, 0.8235110214193696},
    {1.5, 2.0, 1.1601553017399715, 0.7019080247658523},
    {1.5, 2.0, 2.1017480113324893, 0.5229385691904036},
    {1.5, 2.0, 3.807546021222372, 0.30237687853957557},
    {1.5, 2.0, 6.897785379387658, 0.1101626051265393},
    {1.5, 2.0, 12.496091412919867, 0.030644023128878532},
    {1.5, 2.0, 22.63803409521449, 0.025216857478471064},
    {1.5, 2.0, 41.011270705513, 0.013641501155898083},
    {1.5, 2.0, 74.2963950759495, 0.00759999070008481},
    {1.5, 2.0, 134.59603241553643, 0.004191270457315108},
    {1.5, 2.0, 243.83540982688265, 0.002313740420567769},
    {1.5, 2.0, 441.73447031400735, 0.0012772020355193152},
    {1.5, 2.0, 800.2502278161052, 0.0007050143971156121},
    {1.5, 2.0, 1449.7406703726315, 0.00038916551889362405},
    {1.5, 2.0, 2626.36352765333, 0.00021481772201283145},
    {1.5, 2.0, 4757.944314009414, 0.00011857842370235364},
    {1.5, 2.0, 8619.535664753032, 6.545475200207589e-05},
    {1.5, 2.0, 15615.230060004966, 3.613072475021727e-05},
    {1.5, 2.0, 28288.694346259665, 1.9943995128232132e-05},
    {1.5, 2.0, 51248.058769609364, 1.1008994227105111e-05},
    {1.5, 2.0, 92841.45445194744, 6.076914528703769e-06},
    {1.5, 2.0, 168192.4324880869, 3.3544290617850656e-06},
    {1.5, 2.0, 304698.9570903505, 1.8516295195886293e-06},
    {1.5, 2.0, 551995.4321281574, 1.0220910368209278e-06},
    {1.5, 2.0, 1000000.0, 5.641895835466984e-07},
    {1.5, 1.5, 0.0, 1.1283791670955126},
    {1.5, 1.5, 0.01, 1.1233877559421273},
    {1.5, 1.5, 0.018116091942004142, 1.1193492869425659},
    {1.5, 1.5, 0.03281927872511474, 1.1120618343726036},
    {1.5, 1.5, 0.05945570708544391, 1.0989534772535534},
    {1.5, 1.5, 0.10771050560367691, 1.075510978224185},
    {1.5, 1.5, 0.19512934226359632, 1.0340267638729268},
    {1.5, 1.5, 0.35349811050301055, 0.9620133173570724},
    {1.5, 1.5, 0.640400427119728, 0.8413356933439187},
    {1.5, 1.5, 1.1601553017399715, 0.6519214652212307},
    {1.5, 1.5, 2.1017480113324893, 0.3893864386516952},
    {1.5, 1.5, 3.807546021222372, 0.10586947842823662},
    {1.5, 1.5, 6.897785379387658, -0.06340586627936617},
    {1.5, 1.5, 12.496091412919867, -0.03694925442220081},
    {1.5, 1.5, 22.63803409521449, 0.007162591006103659},
    {1.5, 1.5, 41.011270705513, -0.0012426599410952708},
    {1.5, 1.5, 74.2963950759495, -8.169500329422677e-05},
    {1.5, 1.5, 134.59603241553643, -2.3800634119499778e-05},
    {1.5, 1.5, 243.83540982688265, -7.112074125207001e-06},
    {1.5, 1.5, 441.73447031400735, -2.168084563601758e-06},
    {1.5, 1.5, 800.2502278161052, -6.607056518657714e-07},
    {1.5, 1.5, 1449.7406703726315, -2.0132492528732107e-07},
    {1.5, 1.5, 2626.36352765333, -6.134429371690725e-08},
    {1.5, 1.5, 4757.944314009414, -1.8691616502835047e-08},
    {1.5, 1.5, 8619.535664753032, -5.6953229423259355e-09},
    {1.5, 1.5, 15615.230060004966, -1.7353596002792123e-09},
    {1.5, 1.5, 28288.694346259665, -5.287623197503723e-10},
    {1.5, 1.5, 51248.058769609364, -1.6111333288848223e-10},
    {1.5, 1.5, 92841.45445194744, -4.909106501620125e-11},
    {1.5, 1.5, 168192.4324880869, -1.4957996360400918e-11},
    {1.5, 1.5, 304698.9570903505, -4.557685895586304e-12},
    {1.5, 1.5, 551995.4321281574, -1.3887221395400564e-12},
    {1.5, 1.5, 1000000.0, -4.23142187644156e-13},
    {1.9, 1.0, 0.0, 1.0},
    {1.9, 1.0, 0.01, 0.9945332134538987},
    {1.9, 1.0, 0.018116091942004142, 0.990104551920271},
    {1.9, 1.0, 0.03281927872511474, 0.9821003077756276},
    {1.9, 1.0, 0.05945570708544391, 0.9676611824762672},
    {1.9, 1.0, 0.10771050560367691, 0.9417039829561802},
    {1.9, 1.0, 0.19512934226359632, 0.8953342527173104},
    {1.9, 1.0, 0.35349811050301055, 0.8134514624195487},
    {1.9, 1.0, 0.640400427119728, 0.6719133715562108},
    {1.9, 1.0, 1.1601553017399715, 0.4368987453203509},
    {1.9, 1.0, 2.1017480113324893, 0.07611571385246547},
    {1.9, 1.0, 3.807546021222372, -0.39295150586621846},
    {1.9, 1.0, 6.897785379387658, -0.7831736649754965},
    {1.9, 1.0, 12.496091412919867, -0.6305903283748544},
    {1.9, 1.0, 22.63803409521449, 0.2863858347543846},
    {1.9, 1.0, 41.011270705513, 0.4262628424822257},
    {1.9, 1.0, 74.2963950759495, -0.4662995053273394},
    {1.9, 1.0, 134.59603241553643, 0.29389658864945245},
    {1.9, 1.0, 243.83540982688265, 0.1533368931633828},
    {1.9, 1.0, 441.73447031400735, 0.11708834699398685},
    {1.9, 1.0, 800.2502278161052, -0.038271158373691105},
    {1.9, 1.0, 1449.7406703726315, -0.009243713595421721},
    {1.9, 1.0, 2626.36352765333, 0.005734359770142511},
    {1.9, 1.0, 4757.944314009414, -0.00042346134749651304},
    {1.9, 1.0, 8619.535664753032, -3.346722005251784e-05},
    {1.9, 1.0, 15615.230060004966, -7.707912381910399e-06},
    {1.9, 1.0, 28288.694346259665, -3.3308346772276285e-06},
    {1.9, 1.0, 51248.058769609364, -1.8456331941996811e-06},
    {1.9, 1.0, 92841.45445194744, -1.0188646164547869e-06},
    {1.9, 1.0, 168192.4324880869, -5.624338027268969e-07},
    {1.9, 1.0, 304698.9570903505, -3.104685662070853e-07},
    {1.9, 1.0, 551995.4321281574, -1.7137956950974124e-07},
    {1.9, 1.0, 1000000.0, -9.460145229880335e-08},
    {1.9, 2.0, 0.0, 1.0},
    {1.9, 2.0, 0.01, 0.9981141364699267},
    {1.9, 2.0, 0.018116091942004142, 0.9965852680239482},
    {1.9, 2.0, 0.03281927872511474, 0.9938194671008423},
    {1.9, 2.0, 0.05945570708544391, 0.988821733412529},
    {1.9, 2.0, 0.10771050560367691, 0.9798097401537899},
    {1.9, 2.0, 0.19512934226359632, 0.9636205075573515},
    {1.9, 2.0, 0.35349811050301055, 0.934737416909283},
    {1.9, 2.0, 0.640400427119728, 0.8838505696578792},
    {1.9, 2.0, 1.1601553017399715, 0.796243177723271},
    {1.9, 2.0, 2.1017480113324893, 0.6517609696898767},
    {1.9, 2.0, 3.807546021222372, 0.4322430460695828},
    {1.9, 2.0, 6.897785379387658, 0.1495613127863074},
    {1.9, 2.0, 12.496091412919867, -0.09776317782393054},
    {1.9, 2.0, 22.63803409521449, -0.12064981691581719},
    {1.9, 2.0, 41.011270705513, 0.05417966438598764},
    {1.9, 2.0, 74.2963950759495, -0.004215809749687757},
    {1.9, 2.0, 134.59603241553643, 0.013736605631530579},
    {1.9, 2.0, 243.83540982688265, -0.010253797672129097},
    {1.9, 2.0, 441.73447031400735, -0.003034027311875096},
    {1.9, 2.0, 800.2502278161052, 0.0017773929042049874},
    {1.9, 2.0, 1449.7406703726315, 0.0005529823088480586},
    {1.9, 2.0, 2626.36352765333, 3.234932436808325e-05},
    {1.9, 2.0, 4757.944314009414, 1.3775724629340696e-05},
    {1.9, 2.0, 8619.535664753032, 1.1713183587612334e-05},
    {1.9, 2.0, 15615.230060004966, 6.727412795777518e-06},
    {1.9, 2.0, 28288.694346259665, 3.7153300222470195e-06},
    {1.9, 2.0, 51248.058769609364, 2.0509572699898684e-06},
    {1.9, 2.0, 92841.45445194744, 1.1321485984989965e-06},
    {1.9, 2.0, 168192.4324880869, 6.249498521569617e-07},
    {1.9, 2.0, 304698.9570903505, 3.449722054270232e-07},
    {1.9, 2.0, 551995.4321281574, 1.9042391705206034e-07},
    {1.9, 2.0, 1000000.0, 1.0511338694731828e-07},
    {1.9, 1.9, 0.0, 1.0397541343476364},
    {1.9, 1.9, 0.01, 1.0376252125460788},
    {1.9, 1.9, 0.018116091942004142, 1.0358993854748955},
    {1.9, 1.9, 0.03281927872511474, 1.0327774783511043},
    {1.9, 1.9, 0.05945570708544391, 1.0271369316975036},
    {1.9, 1.9, 0.10771050560367691, 1.016967976062131},
    {1.9, 1.9, 0.19512934226359632, 0.9987074527506833},
    {1.9, 1.9, 0.35349811050301055, 0.9661520824543045},
    {1.9, 1.9, 0.640400427119728, 0.9088701492087391},
    {1.9, 1.9, 1.1601553017399715, 0.8104927201047408},
    {1.9, 1.9, 2.1017480113324893, 0.6490027940061935},
    {1.9, 1.9, 3.807546021222372, 0.405936702994174},
    {1.9, 1.9, 6.897785379387658, 0.0994884165061397},
    {1.9, 1.9, 12.496091412919867, -0.1516997594591463},
    {1.9, 1.9, 22.63803409521449, -0.13644503085862228},
    {1.9, 1.9, 41.011270705513, 0.07503998468481565},
    {1.9, 1.9, 74.2963950759495, -0.017011000545612814},
    {1.9, 1.9, 134.59603241553643, 0.02155176670424508},
    {1.9, 1.9, 243.83540982688265, -0.012386743613876393},
    {1.9, 1.9, 441.73447031400735, -0.0034252244951881805},
    {1.9, 1.9, 800.2502278161052, 0.0020749506909800135},
    {1.9, 1.9, 1449.7406703726315, 0.0006566960874047439},
    {1.9, 1.9, 2626.36352765333, 1.1306816726859069e-05},
    {1.9, 1.9, 4757.944314009414, -1.4180411783961408e-05},
    {1.9, 1.9, 8619.535664753032, -8.224174018685464e-07},
    {1.9, 1.9, 15615.230060004966, -8.187462076840085e-09},
    {1.9, 1.9, 28288.694346259665, -2.561351426116169e-10},
    {1.9, 1.9, 51248.058769609364, -6.851016378417334e-11},
    {1.9, 1.9, 92841.45445194744, -2.0848968753473353e-11},
    {1.9, 1.9, 168192.4324880869, -6.353230258919179e-12},
    {1.9, 1.9, 304698.9570903505, -1.9359183573977977e-12},
    {1.9, 1.9, 551995.4321281574, -5.898884065757181e-13},
    {1.9, 1.9, 1000000.0, -1.7974109072582276e-13},
};

inline constexpr MlPoint kMlAsymOverlap[] = {
    {1.1, 1.0, 40.0, -0.0024804767601797023},
    {1.1, 1.0, 50.0, -0.001960095672916797},
    {1.1, 1.0, 60.0, -0.0016203536171315658},
    {1.1, 1.0, 70.0, -0.0013810505016950058},
    {1.1, 1.0, 80.0, -0.0012033636491874638},
    {1.1, 2.0, 40.0, 0.02350692367528524},
    {1.1, 2.0, 50.0, 0.018786850570237303},
    {1.1, 2.0, 60.0, 0.01564549654861838},
    {1.1, 2.0, 70.0, 0.013404242005404245},
    {1.1, 2.0, 80.0, 0.011724685848806121},
    {1.1, 1.1, 40.0, -7.247124860925575e-05},
    {1.1, 1.1, 50.0, -4.521739555418591e-05},
    {1.1, 1.1, 60.0, -3.0888430679587343e-05},
    {1.1, 1.1, 70.0, -2.2433373505315472e-05},
    {1.1, 1.1, 80.0, -1.7029656011263855e-05},
};

struct GammaPoint { double x, value; };
inline constexpr GammaPoint kGamma[] = {
    {0.5, 1.772453850905516},
    {-1.5, 2.363271801207355},
    {1.0, 1.0},
    {3.7, 4.170651783796604},
    {-0.3, -4.326851108825193},
    {-1.25, 3.9213334478885686},
    {7.5, 1871.2543057977884},
    {10.2, 570499.027841035},
    {-0.5, -3.544907701811032},
    {0.1, 9.51350769866873},
    {-1.9375, 8.523027864274525},
    {12.0, 39916800.0},
    {0.03125, 31.45283517707606},
    {-0.96875, -32.467442763433354},
    {5.25, 35.211611852799685},
    {-1.03125, 31.620888050243458},
};

inline constexpr double kMl_a15_b15_eta5 = 0.0045397084964453795;
inline constexpr double kMl_a15_b1_eta1 = 0.39662936531808807;
inline constexpr double kMl_a15_b15_eta100 = -4.018793817834769e-05;
inline constexpr double kPsi_a15_eta1 = 0.678366738412431;

inline constexpr double kPsiZeros_a12[] = {
    4.872159292446193,
};
inline constexpr double kPsiZeroScanCeiling_a12 = 196.45415763829484;

inline constexpr double kPsiZeros_a15[] = {
    7.70016323282673,
    17.120573500266097,
    32.99650275135478,
    54.65842786117204,
    67.5247861931403,
};
inline constexpr double kPsiZeroScanCeiling_a15 = 1839.322288705272;

inline constexpr double kPsiZeros_a18[] = {
    431.244102351347,
    495.6204644563069,
    606.3366292873923,
    698.3615083300956,
    813.9913202362986,
    926.234149063627,
    1051.2422486613705,
    1180.4081246448704,
    1316.0639010830273,
    1461.3316376195112,
    1606.6997292130982,
    1769.7208517133454,
    1920.8625438753775,
    2107.917298195227,
    2254.176824844555,
    2484.786174600931,
    2595.1552688175425,
};
inline constexpr double kPsiZeroScanCeiling_a18 = 65345.046924865586;

// alpha = 3/2, theta = 7*pi/8, adaptive tanh-sinh quadrature at 40 digits
inline constexpr double kNu1_a15 = 98.49675983766596;
inline constexpr double kNu2_a15 = 14.840290271622365;
inline constexpr double kNu3_a15 = 1114.789073545284;
inline constexpr double kEtaBound_a15 = 169245.18585616763;
inline constexpr double kSafeTime_a15_mu1 = 3059.6908617133718;

}  // namespace fdw_ref
