// Generated by tools/make_cylinder_mesh.py; do not edit.
#pragma once

namespace splitfem::data {

inline constexpr const char* cylinder_g1_mesh = R"MESH(
# channel [0,2.2]x[0,0.41] minus polygonal cylinder r=0.05 at (0.2,0.2)
# tags: 1 inflow, 2 outflow, 3 walls, 4 cylinder
mesh 2d triangle
vertices 486
0 0
0.039730831256821871 0
0.075740531826947843 0
0.10888288474070185 0
0.13993358638308306 0
0.16961171752083024 0
0.19859726694490204 0
0.22755086741961913 0
0.25713231448810592 0
0.28801893543132401 0
0.32092494425848517 0
0.35661982729303843 0
0.39594885119205719 0
0.43985453379360934 0
0.48895668162984124 0
0.53928148511131513 0
0.58960628859278885 0
0.63993109207426269 0
0.69025589555573652 0
0.74058069903721024 0
0.79090550251868408 0
0.84123030600015791 0
0.89155510948163164 0
0.94187991296310547 0
0.9922047164445793 0
1.0425295199260531 0
1.092854323407527 0
1.1431791268890048 0
1.1935039303704833 0
1.2438287338519618 0
1.2941535373334403 0
1.3444783408149188 0
1.3948031442963973 0
1.4451279477778758 0
1.4954527512593543 0
1.5457775547408328 0
1.5961023582223113 0
1.6464271617037891 0
1.6967519651852627 0
1.7470767686667366 0
1.7974015721482104 0
1.847726375629684 0
1.8980511791111578 0
1.9483759825926315 0
1.9987007860741051 0
2.0490255895555789 0
2.099350393037053 0
2.1496751965185261 0
2.2000000000000002 0
2.2000000000000002 0.0455555555555551
2.2000000000000002 0.09111111111111074
2.2000000000000002 0.13666666666666447
2.2000000000000002 0.18222222222221823
2.2000000000000002 0.22777777777777414
2.2000000000000002 0.2733333333333321
2.2000000000000002 0.31888888888889011
2.2000000000000002 0.36444444444444629
2.2000000000000002 0.40999999999999998
2.150239081070922 0.40999999999999998
2.1004781621418434 0.40999999999999998
2.0507172432127656 0.40999999999999998
2.0009563242836874 0.40999999999999998
1.9511954053546092 0.40999999999999998
1.9014344864255304 0.40999999999999998
1.8516735674964513 0.40999999999999998
1.8019126485673724 0.40999999999999998
1.7521517296382934 0.40999999999999998
1.7023908107092161 0.40999999999999998
1.6526298917801392 0.40999999999999998
1.6028689728510626 0.40999999999999998
1.5531080539219859 0.40999999999999998
1.5033471349929091 0.40999999999999998
1.4535862160638324 0.40999999999999998
1.4038252971347558 0.40999999999999998
1.3540643782056789 0.40999999999999998
1.3043034592766023 0.40999999999999998
1.2545425403475257 0.40999999999999998
1.204781621418449 0.40999999999999998
1.1550207024893724 0.40999999999999998
1.1052597835602955 0.40999999999999998
1.0554988646312147 0.40999999999999998
1.0057379457021334 0.40999999999999998
0.95597702677305207 0.40999999999999998
0.90621610784397055 0.40999999999999998
0.8564551889148897 0.40999999999999998
0.80669426998580818 0.40999999999999998
0.75693335105672688 0.40999999999999998
0.70717243212764558 0.40999999999999998
0.65741151319856428 0.40999999999999998
0.60765059426948298 0.40999999999999998
0.55788967534040146 0.40999999999999998
0.50812875641132038 0.40999999999999998
0.45839184160295043 0.40999999999999998
0.41194443951697468 0.40999999999999998
0.3703551116888546 0.40999999999999998
0.3326469936628289 0.40999999999999998
0.29794322466829049 0.40999999999999998
0.26544678396351551 0.40999999999999998
0.23441889365097901 0.40999999999999998
0.20416142026908468 0.40999999999999998
0.17399694141732969 0.40999999999999998
0.14325077018416543 0.40999999999999998
0.11123230599076717 0.40999999999999998
0.077215915897920429 0.40999999999999998
0.040422586156942941 0.40999999999999998
0 0.40999999999999998
0 0.37124550835553149
0 0.33607528710765167
0 0.30373625743060501
0 0.27354388897478593
0 0.24486648182887899
0 0.21711021190726382
0 0.18970457858474524
0 0.16208800792531755
0 0.1336935537677908
0 0.10393453335037495
0 0.072190011484925931
0 0.03779000525158599
0.25 0.20000000000000001
0.24938441702975689 0.20782172325201156
0.24755282581475768 0.21545084971874739
0.24455032620941841 0.22269952498697734
0.24045084971874739 0.22938926261462367
0.2353553390593274 0.23535533905932737
0.22938926261462367 0.24045084971874739
0.22269952498697734 0.24455032620941841
0.21545084971874739 0.24755282581475768
0.20782172325201156 0.24938441702975689
0.20000000000000001 0.25
0.19217827674798846 0.24938441702975689
0.18454915028125266 0.24755282581475768
0.17730047501302268 0.24455032620941841
0.17061073738537635 0.24045084971874739
0.16464466094067265 0.2353553390593274
0.15954915028125263 0.22938926261462367
0.15544967379058161 0.22269952498697737
0.15244717418524234 0.21545084971874739
0.15061558297024313 0.20782172325201156
0.15000000000000002 0.20000000000000001
0.15061558297024313 0.19217827674798849
0.15244717418524234 0.18454915028125266
0.15544967379058161 0.17730047501302268
0.15954915028125263 0.17061073738537635
0.16464466094067262 0.16464466094067265
0.17061073738537635 0.15954915028125263
0.17730047501302265 0.15544967379058161
0.18454915028125263 0.15244717418524234
0.19217827674798846 0.15061558297024313
0.20000000000000001 0.15000000000000002
0.20782172325201154 0.15061558297024313
0.21545084971874737 0.15244717418524234
0.22269952498697734 0.15544967379058161
0.22938926261462367 0.15954915028125263
0.23535533905932737 0.16464466094067262
0.24045084971874739 0.17061073738537635
0.24455032620941841 0.17730047501302265
0.24755282581475768 0.18454915028125263
0.24938441702975689 0.19217827674798846
0.26890656254822687 0.13322954895946187
1.576617099823898 0.072147330974230137
0.17593563418354388 0.25362390982600286
0.25814248980691828 0.23402912927962197
0.072338669258661226 0.24561728487621459
0.215884219387976 0.042026031046769032
1.7887768627750458 0.17158977563539285
0.96286627140682302 0.33832880773014962
0.10697572922326828 0.14320211860668813
0.18359755998098046 0.11753381516827574
0.15285169891919517 0.27001704466753396
0.13754124314515451 0.2332277579735155
0.049315912306353134 0.063495981998970552
0.91792606245937824 0.20255867742878375
0.046310775922837617 0.30279782475596628
0.20421812178677626 0.26252139988909073
0.12143922677452286 0.17945821450025826
1.399449385929586 0.27562366039518804
0.20730951055780125 0.30897063499186289
1.0656382713299948 0.2083292664396382
0.37129905313443423 0.23038845215087533
0.28082113990945456 0.045456665342881113
0.22322667176981281 0.25705385238988504
0.082822727865377782 0.31529979539129949
0.30042663134009434 0.36273649072999492
0.68390691761064781 0.072431432230222387
0.078077076912271476 0.19025410365882775
0.50577562428793288 0.26776280197352115
0.21288950940997417 0.25634652211740927
0.90437283315963657 0.072893528844305625
0.35301577919733379 0.30931332303101239
0.26268029238681756 0.36528985324758406
0.2465098668476518 0.041914593359372219
2.0573453820012699 0.13270902039017846
0.63122579586400851 0.3354789926244644
0.21254455199872058 0.14181273873225267
0.25945019619326454 0.14761166384786875
0.081357357590006077 0.093073533143207265
0.17553637908768591 0.33688615578561537
0.28311806235352083 0.32904161790604758
0.14541227608608456 0.24449315821547782
2.064433872503062 0.19998174371299399
0.41870704243635126 0.11802829529114628
0.48268022936236793 0.14095282414029806
1.2127464975504603 0.34044613708243671
0.6470051594601326 0.13955516501616494
0.81553393297011667 0.27428888995058132
1.0317183419502485 0.13828691716399322
0.29542578576413042 0.29607171983201952
1.5278895613313659 0.27468949195173176
0.15471418146294405 0.25412532988110087
0.28293713036683632 0.11448702869794965
0.09935352219344451 0.16500725259702759
1.9095576563124663 0.13504500523254906
0.041602565387197983 0.22474454295074794
0.19607745862545431 0.25715103260780869
0.22194167730532557 0.13247097850197811
1.504457553741499 0.070784755266626503
0.24838371736862788 0.16789241098001798
0.18585512076428867 0.2785493371940464
0.26001850334560073 0.07366285688672583
0.2655426042262411 0.17981213060946841
0.33954449558030281 0.35702343116203761
0.27608680753970011 0.18885545126483685
0.16404963254162105 0.13812973136966902
0.40425623425711038 0.061895289876536273
0.95403723378329652 0.13955294768823404
0.23047099778692612 0.073915858720427885
0.31644363628784739 0.32130376472470551
0.34092454113119286 0.16506672438607803
1.0363602233468034 0.070097993076276899
0.25442434643714784 0.17575383803246933
0.27737875948029034 0.27714827399164466
0.22919357894364475 0.35791809300550104
0.21552720585630611 0.096138657210074169
1.4299707768635195 0.20398796153826756
2.1169998472529907 0.071568652784665579
0.8007326815777237 0.13978189157033158
0.30058281447157065 0.26688287695568147
0.1157551399353251 0.20028944751496527
1.467268104698644 0.13737101275896157
0.48494342669881418 0.33447027829028581
1.5963450113872288 0.27419591803484883
2.0529574976782015 0.33968672663674232
0.14381898292788692 0.17874937009792133
1.3238909207096508 0.14152018266130159
1.719697684795787 0.069220886193759476
0.73894468377629097 0.27389756108262769
0.12373305437433757 0.045584538415186449
0.36011929836721951 0.19218304601877648
0.27094959787376871 0.20325676849101498
0.12683728526700735 0.36421670646705079
0.23633162552289902 0.2570674728250294
0.26321989828369852 0.19309445169962963
0.30981817546307178 0.11912091587599079
0.56617992423489771 0.1402076099448831
0.14456734988540904 0.076939418337445734
0.20249048913745407 0.27592321293814126
0.6111087327398208 0.2042886462685494
2.013480092147808 0.26790370891842546
1.6960236904798516 0.34090670278355772
0.24510738617245031 0.2679982348819771
0.13958089973404822 0.26002465955540044
2.0738796334918832 0.27103881214645859
0.11386348752152461 0.082780184622779002
0.55672049887745056 0.33719380503216678
1.4336157278038402 0.07139555253477721
0.37880898378544009 0.15222544607036903
0.87650871893221893 0.33702405543326053
0.18708191957899489 0.14198760906226518
0.11427697234105481 0.32602838691042652
1.4589993774978012 0.33845028244508579
0.18586037969169716 0.31211443194261335
0.23608547130613503 0.28321835845677318
0.429362042136194 0.16639533180462721
0.1360967529272713 0.15230377171163026
1.2935491570004496 0.071890335854155496
0.095681745629844994 0.23052690388486732
0.17377578927918286 0.074171980209585653
0.24114267342507187 0.15903327511156529
0.342041366741408 0.13058372012721522
0.1723277928429485 0.10060909214600565
0.14950209491228889 0.14298588510023816
0.14933769971299729 0.1689688895727614
1.7151760643898082 0.2036979489194701
1.395116082401433 0.13900998282703589
0.12963197578870447 0.19292576206869902
0.21513891102274008 0.26752371091571059
0.25491837370284653 0.22269325548075045
2.132449850959409 0.27238550560402147
1.1807403587309295 0.1442462177902063
1.3768338710079473 0.3395089144492644
0.26420301367706783 0.098749733177699889
0.16883904645836947 0.27622312495750273
0.31307874209875969 0.17546438986660423
0.12989346855160447 0.24683067014917656
0.2327259832400578 0.15115759541008264
0.19220722162048673 0.26683720193248756
1.0963131506913413 0.073398502367836779
0.087790810750512233 0.050448520920543513
0.35707093781369481 0.055749102424185577
0.28615436961541402 0.20191163414948773
1.667549249236782 0.2723836359406136
0.26237496401328508 0.26300924247834123
0.24485680240605226 0.30338050048123144
0.29222002759315047 0.18314599084655692
0.1933354813476372 0.13030598589745396
0.76805554325532643 0.20741515031653368
0.58181339586695568 0.26817402145672992
0.20805703746806037 0.12958553707888948
0.28059568180788874 0.23503538693126344
0.16168081574484 0.36713044711675863
0.60632293656874903 0.073980070609207735
1.2148457251088396 0.21119142777097885
0.25868994193591521 0.20319173258298578
0.31617861357740479 0.051253091651605347
1.5392017884264773 0.13771823569475694
1.7362143020335552 0.27754891815273941
0.14147901327322515 0.21225643724900969
0.39809053782560944 0.1968202443193556
0.22394133055830462 0.29838949012186566
0.32492360128379288 0.28378206578358389
0.2924732953862782 0.084353772648596795
0.043341904434259296 0.26262832578515727
0.25260178149381618 0.15845951987451287
1.771762661932003 0.33891009903321728
0.26325071515857817 0.16585779345928589
1.6199075309265081 0.33854949212908442
0.14506149681003516 0.22272563049154154
1.9985684794124972 0.19787422933061896
1.2531856403044077 0.14283376423096564
0.20117538557646844 0.1152881576750308
0.84287038057906238 0.20522942951633777
0.24918213029797562 0.13467724472299786
0.2035799604986307 0.33526975887332466
0.52709620808064039 0.20178086139829712
2.1273548001213318 0.13774948393366501
1.2256767898444438 0.074687204489081477
1.4646736127266777 0.26979605909892268
0.45832752493415962 0.21472017809267305
0.090387906366410573 0.35938726027565165
0.1504358726225882 0.23260007714528091
1.6476439831188359 0.070916854495070208
1.6424669839841248 0.20655944592066611
0.098373303786065597 0.25606683397720542
1.0976466969471568 0.27586535218462732
0.24968734754624106 0.25333030068957624
1.8781377594679167 0.0690998813231265
0.23852136709187258 0.10082509345109265
0.66087368968090943 0.27077308191253335
0.046542108052124914 0.1097901061818698
1.6807592410191721 0.13861854773905596
0.13591866615892864 0.16841632285756733
0.10390610465921307 0.11715105072024307
0.38120793843271283 0.34917632809072019
1.3270908334930973 0.27660310570785673
0.12821598132229589 0.13424121052984259
0.043091760625192051 0.14930108003685547
0.21719964226054181 0.28177886180292167
0.2276742465311842 0.32370005480756764
1.7505862245124881 0.12769762708563592
0.32962096473702446 0.092119812037136803
0.22314465843495754 0.1454272298423171
0.25314890314198207 0.33063787201672956
1.2877140267262521 0.21057510354894354
1.5713179379717928 0.20653781039142563
0.19657155213018901 0.36829350809332739
1.9836574911089806 0.13189924496455255
0.25574270195961513 0.21266963545550896
0.14140203906790802 0.18938203188165467
0.72451041976103603 0.14036525873905448
1.9845240535081849 0.33720847677781002
1.3597070565448808 0.20866368208269637
0.99345737181967653 0.20451904189128164
1.7855040906597928 0.23054536891449107
0.23902037510566293 0.2446889877816687
0.25438810587754751 0.11796837766288643
0.24966751669976212 0.24162161788886749
0.5287010979227964 0.075833480452293031
0.35714433379725752 0.26596293634581358
0.6910587355611415 0.20625579039578279
1.5017702904723385 0.20335507350465215
2.0353931483407277 0.069489661199027553
0.16614876844544726 0.24866956329154305
0.88658699257016427 0.27039056897035812
0.18610352816467329 0.042036163342171098
0.077287008901648593 0.13274552635104306
0.24437741665671972 0.1481099211100812
1.6102050707796312 0.13929910588359648
0.22873395466475691 0.26897432323972026
1.8185572553792386 0.28008554454047246
1.3625834743713512 0.072920067223536389
0.17574544759244312 0.29288569993174812
0.1514203770923459 0.10383777280163625
1.8837634748452783 0.26764743400756374
1.2958073242873436 0.34067847665106255
1.140126007144501 0.21057580938758547
0.27798762148685413 0.21705593873027518
0.26453696902345208 0.24570206350890042
1.8475595705976289 0.34130459141116226
0.14530353515697 0.33313167512199643
1.7980894740923661 0.069275964670425738
1.8581144908624825 0.20159832818469761
0.12048362750924488 0.16112327518523797
0.29044936000685634 0.1389240962313284
0.16613732930566219 0.26120281961681902
1.9542623113927908 0.069142701225479747
0.17888196070627124 0.26557714851421982
1.9299758802228997 0.19926019087486629
0.11504165676028259 0.23869604955096341
1.2518665750605482 0.27784588194150495
0.19671217490141243 0.29175562795946181
0.18597719272935476 0.25669048224575658
1.0496610495623093 0.34036920979373075
0.14691597639322201 0.12542560685986298
0.072953005989160297 0.16370095157046216
0.10276781609554118 0.18618460381927948
0.16564676169881734 0.12100841889345815
0.26874674821681155 0.30277760179201063
0.11498152239080144 0.21898305465618961
0.26752463035014001 0.22763973034162205
0.078169731418091776 0.27855757292781358
0.29414360662765232 0.21989846084167428
1.5416066045935259 0.33965707641922777
0.15440310965344567 0.2888254733401997
0.30509823977117323 0.1999132110705284
0.97288931693295266 0.074348825010033384
0.11929230939755399 0.26453907318037023
0.42736289914381925 0.3404126850535546
0.44477378348728602 0.27872970340968423
0.2805814972286132 0.25454312400130735
0.87658143119248355 0.13870117821515579
0.16230444441794675 0.15178402569910482
0.24805673173104018 0.23106436199291261
1.1319099083702546 0.33881752014572547
0.097200507845880468 0.2075205033221281
0.10868254492971061 0.28999266132527007
0.39348345601799334 0.29242515170341687
1.9500578682111993 0.26731766630428616
0.20100805700903199 0.14045918547325537
0.1575460394841732 0.24150976991138207
0.13475882366586683 0.30377750759996636
0.17776923150934293 0.13299375444683131
0.27502932191821072 0.15366159431081988
0.75885970247035461 0.073612016807825711
0.40969514213579578 0.24255494076624773
1.159618082582619 0.07520802627025068
0.19305445253867706 0.096714396578235398
0.21899672321828675 0.11642635663467608
0.2648509056567776 0.21487539987815207
0.13151594606255151 0.22139686020518895
0.31522884545797347 0.22224442257444282
0.32912943764933139 0.1961199985438343
0.12891693586859404 0.10974432967022084
1.1068543645746496 0.14276646776567256
0.70935207439423209 0.33861751040622029
0.37111493320287281 0.10416790024250241
0.83288793961670671 0.072119318773598909
0.32517340465974615 0.25055572127676384
0.27774065699276362 0.17179724484832393
0.79194779088351763 0.33833362189612903
0.2342274883662554 0.13874181330746604
1.0228324420871588 0.27623480051545246
0.95365856206712218 0.27005695841279109
0.34107677897702959 0.22364841965285165
1.9157731803949167 0.33655280635263157
0.15601596971734033 0.043308790720878412
0.044585404548066712 0.18732759958701789
0.15075482968956713 0.15724223110173538
0.31497431031788092 0.14840368141248289
0.051063030050842048 0.34972863313294822
0.25602108791611949 0.28259052700591503
0.14017171145795623 0.20081034770390746
0.29975348684667857 0.24179715970161195
2.1237092033386551 0.33870047179156398
0.16122421630403205 0.31063611656740353
0.23554819772381647 0.12251768768810453
0.29383511650098881 0.1617311117607588
0.45983589010981457 0.073593701531440667
0.22973480942603197 0.24915846938288794
0.13419184654503716 0.27971493250827217
1.8376371402707115 0.12802779535800335
2.1281037284156317 0.20460751894531207
0.25604923619517711 0.18607012287118133
0.20204823507884931 0.072530564544781032
0.07270644789785316 0.21633808593772
0.12925227366019654 0.20771984904867757
1.1750863128107905 0.27640969826870737
triangles 814
45 46 380
211 365 406
400 211 406
211 400 479
349 244 358
296 228 26
27 296 26
335 28 29
274 335 29
274 389 243
389 31 32
31 389 274
53 287 480
287 55 472
365 327 406
327 436 406
436 327 257
432 343 485
452 394 177
394 343 177
343 394 485
394 452 288
485 311 408
311 362 408
394 311 485
311 394 288
376 14 15
14 376 476
442 20 455
223 200 454
200 223 476
245 204 458
52 53 480
52 334 51
334 52 480
51 334 50
44 45 380
43 404 42
211 404 365
365 404 380
44 404 43
404 44 380
372 400 388
315 372 388
258 300 315
244 399 358
399 479 358
399 39 40
39 399 244
41 399 40
266 84 458
204 266 458
452 205 296
205 228 296
205 452 177
371 205 177
228 205 424
24 228 424
23 24 424
20 21 455
187 23 424
187 429 455
429 171 330
444 27 28
335 444 28
27 444 296
444 335 288
452 444 288
444 452 296
328 274 243
328 335 274
335 328 288
362 328 243
328 311 288
311 328 362
30 274 29
30 31 274
60 61 241
58 59 472
59 60 241
472 59 241
58 56 57
55 56 472
56 58 472
287 261 480
257 261 241
261 472 241
261 287 472
54 287 53
287 54 55
64 397 63
463 62 63
397 463 63
215 34 35
264 389 32
264 215 238
215 314 238
75 393 74
461 171 371
432 78 79
202 432 485
202 485 408
78 202 77
202 78 432
393 202 408
411 432 79
432 411 343
421 70 71
69 70 421
207 379 363
379 314 363
314 379 238
111 112 465
112 113 465
13 14 476
13 223 12
223 13 476
223 298 12
298 223 454
17 18 183
310 17 183
310 253 376
212 111 465
108 109 172
109 321 172
352 426 93
426 352 435
88 453 87
453 88 192
453 245 458
453 86 87
86 453 458
306 347 192
347 453 192
453 347 245
204 305 330
245 305 204
88 89 192
84 85 458
85 86 458
191 365 380
191 327 365
46 234 380
234 191 380
191 234 334
47 234 46
334 234 50
49 47 48
234 49 50
49 234 47
404 345 42
345 404 211
345 211 479
345 41 42
399 345 479
345 399 41
400 164 479
372 164 400
479 164 358
282 372 315
282 300 341
300 282 315
349 282 341
282 164 372
282 349 358
164 282 358
258 67 68
67 258 66
69 325 68
325 258 68
325 69 421
258 325 300
38 39 244
266 83 84
82 83 165
83 266 165
224 205 371
205 224 424
171 224 371
224 171 429
224 187 424
187 224 429
228 25 26
24 25 228
187 22 23
21 22 455
22 187 455
327 199 257
199 261 257
261 199 480
191 199 327
199 334 480
199 191 334
65 397 64
369 61 62
463 369 62
61 369 241
369 257 241
369 436 257
369 463 436
463 392 436
400 392 388
392 397 388
392 463 397
392 400 406
436 392 406
33 264 32
33 34 215
264 33 215
159 215 35
159 314 215
75 76 393
202 76 77
76 202 393
461 382 171
382 204 330
171 382 330
382 266 204
266 382 165
382 461 165
81 82 165
411 81 165
461 460 165
460 411 165
411 460 343
460 461 371
460 371 177
343 460 177
393 289 74
336 379 207
362 353 408
353 393 408
353 289 393
289 353 175
389 283 243
283 264 238
264 283 389
1 117 0
1 170 117
170 1 2
391 451 254
348 114 115
170 116 117
116 348 115
348 116 170
451 262 254
5 464 4
5 6 383
464 5 383
190 7 8
210 413 384
166 210 384
9 10 313
482 232 445
445 329 167
232 329 445
329 304 167
304 329 307
298 11 12
10 11 313
11 298 313
442 19 20
19 442 183
18 19 183
310 16 17
16 376 15
16 310 376
107 108 172
106 104 105
249 309 101
102 249 101
102 103 338
249 102 338
268 249 338
181 268 338
483 212 465
109 110 321
212 110 111
110 212 321
189 96 97
98 189 97
98 99 364
317 178 247
317 272 337
337 201 333
272 201 337
201 253 333
253 201 376
376 201 476
201 200 476
201 272 200
200 265 454
265 278 454
272 265 200
317 265 272
265 317 247
320 179 313
179 9 313
9 179 8
179 190 8
209 252 402
252 209 320
426 92 93
91 263 90
263 306 192
263 89 90
89 263 192
94 352 93
94 95 220
352 94 220
352 188 435
188 352 220
256 347 306
256 306 333
253 256 333
442 368 183
429 235 455
368 235 305
235 429 330
305 235 330
235 442 455
235 368 442
207 240 421
240 325 421
325 240 300
240 207 363
240 363 341
300 240 341
323 65 66
65 323 397
323 258 315
258 323 66
323 315 388
397 323 388
36 159 35
159 386 314
386 349 341
363 386 341
314 386 363
38 340 37
340 38 244
340 36 37
36 340 159
340 244 349
386 340 349
340 386 159
80 411 79
80 81 411
289 73 74
370 353 362
353 370 175
370 362 243
283 370 243
279 391 254
279 445 167
304 440 167
222 440 145
195 348 170
348 195 384
464 246 4
246 464 254
262 246 254
231 98 364
98 231 189
355 348 384
413 355 384
114 355 113
348 355 114
113 355 465
355 413 465
401 174 210
166 401 210
354 401 166
268 434 439
434 268 181
291 422 168
163 482 383
163 7 190
7 163 6
6 163 383
232 225 346
225 232 482
225 163 190
163 225 482
437 304 307
468 107 172
181 468 172
468 181 338
107 468 106
468 104 106
104 468 103
103 468 338
309 100 101
99 100 364
100 309 364
309 196 364
413 184 465
184 483 465
184 413 210
212 162 321
483 162 212
443 317 337
317 443 178
278 359 454
252 359 278
359 298 454
298 359 313
359 320 313
359 252 320
446 232 346
474 446 346
446 329 232
329 446 307
459 474 331
158 209 402
209 290 320
178 462 247
462 450 247
292 450 423
197 182 189
182 96 189
96 182 95
95 182 220
239 263 91
92 239 91
239 92 426
188 226 319
226 188 220
182 226 220
226 182 197
203 310 183
368 203 183
310 203 253
203 256 253
378 368 305
347 378 245
378 305 245
378 203 368
256 378 347
203 378 256
269 73 289
269 421 71
269 289 175
336 269 175
269 207 421
269 336 207
233 336 175
370 233 175
336 233 379
233 370 283
379 233 238
233 283 238
276 482 445
279 276 445
276 279 254
482 276 383
464 276 254
276 464 383
430 222 145
354 351 451
351 354 166
351 262 451
351 195 262
351 166 384
195 351 384
246 3 4
297 170 2
3 297 2
297 3 246
297 195 170
195 297 262
297 246 262
361 197 189
231 361 189
280 430 466
430 280 222
281 141 242
350 242 174
401 350 174
350 281 242
281 350 466
422 473 439
196 473 270
422 478 168
478 422 439
434 478 439
478 434 425
168 260 208
260 198 208
198 260 293
478 260 168
293 260 425
260 478 425
237 284 484
284 237 174
316 448 484
134 438 339
198 438 208
438 198 339
193 150 149
193 437 307
437 193 149
176 332 270
332 196 270
332 231 364
196 332 364
434 342 425
158 194 331
218 179 320
290 218 320
179 218 190
218 225 190
225 218 346
218 290 346
374 158 331
474 374 331
158 374 209
374 290 209
374 474 346
290 374 346
377 462 178
377 443 435
443 377 178
188 377 435
377 188 319
252 467 402
467 252 278
427 443 337
443 427 435
427 426 435
427 239 426
72 269 71
269 72 73
273 401 354
280 273 354
273 350 401
273 280 466
350 273 466
280 412 222
412 280 354
391 412 451
412 354 451
142 281 466
281 142 141
291 390 422
390 473 422
473 390 270
398 473 196
268 398 249
398 268 439
473 398 439
398 309 249
398 196 309
403 405 291
403 168 208
403 291 168
414 184 210
174 414 210
237 414 174
169 198 293
198 169 339
137 136 316
136 326 316
169 326 339
326 448 316
326 169 448
133 438 134
214 193 307
446 214 307
214 446 474
459 214 474
150 360 151
193 360 150
360 294 151
214 360 193
294 360 459
360 214 459
148 437 149
148 147 437
437 267 304
147 267 437
267 440 304
267 147 146
145 267 146
440 267 145
357 332 176
318 357 176
357 361 231
332 357 231
361 357 302
357 318 302
407 293 425
342 407 425
407 169 293
169 407 448
419 434 181
419 342 434
419 181 172
342 419 162
321 419 172
162 419 321
303 292 423
194 385 331
385 459 331
385 294 459
155 154 216
294 152 151
236 456 319
456 377 319
377 456 462
206 226 197
226 206 319
206 236 319
475 467 292
303 475 292
475 303 457
467 475 402
467 227 292
450 227 247
292 227 450
227 467 278
227 265 247
265 227 278
447 286 366
303 221 457
229 155 216
324 229 216
123 373 124
373 344 250
344 259 250
185 337 333
185 427 337
306 185 333
427 185 239
263 185 306
239 185 263
128 127 173
180 477 250
477 180 125
477 125 124
477 373 250
373 477 124
180 126 125
141 140 242
470 139 138
284 470 484
470 316 484
137 470 138
470 137 316
412 415 222
440 415 167
222 415 440
415 279 167
279 415 391
415 412 391
430 143 466
143 142 466
405 217 291
217 390 291
410 130 129
438 381 208
381 403 208
160 410 405
403 160 405
130 160 131
160 130 410
160 381 131
381 160 403
135 326 136
135 134 339
326 135 339
407 417 448
417 237 484
448 417 484
322 385 194
322 324 216
324 322 194
385 277 294
152 277 153
277 152 294
322 277 385
277 322 216
277 154 153
154 277 216
324 441 457
441 324 194
441 475 457
475 441 402
441 158 402
441 194 158
471 456 236
428 471 236
416 206 197
416 361 302
361 416 197
469 416 302
230 428 236
206 230 236
230 416 469
416 230 206
366 120 119
286 120 366
120 286 121
121 431 122
431 286 161
286 431 121
431 123 122
157 156 481
229 156 155
156 229 481
312 366 119
447 312 248
312 447 366
221 219 457
229 219 481
219 324 457
219 229 324
299 303 423
299 221 303
221 299 248
128 213 129
213 410 129
213 128 173
285 387 356
259 387 250
387 180 250
387 285 180
126 186 127
186 126 180
285 186 180
127 186 173
186 285 173
367 470 284
470 367 139
242 367 174
367 284 174
367 140 139
140 367 242
144 430 145
144 143 430
255 285 356
285 255 173
381 132 131
133 132 438
132 381 438
417 433 237
433 414 237
184 433 483
414 433 184
450 449 423
462 449 450
456 449 462
471 449 456
375 431 161
396 375 161
375 396 344
375 344 373
123 375 373
431 375 123
118 312 119
312 251 248
251 221 248
251 157 481
219 251 481
251 219 221
251 118 157
118 251 312
308 471 428
396 308 428
396 301 344
344 301 259
230 301 428
301 396 428
259 301 469
301 230 469
271 318 356
387 271 356
271 469 302
318 271 302
271 259 469
271 387 259
409 255 356
409 318 176
318 409 356
255 409 217
217 409 390
409 176 270
390 409 270
295 255 217
295 217 405
295 213 173
255 295 173
410 295 405
213 295 410
275 417 407
275 433 417
275 342 162
275 407 342
275 162 483
433 275 483
395 447 248
299 395 248
395 418 447
286 418 161
418 286 447
418 395 308
418 396 161
418 308 396
420 395 299
420 299 423
449 420 423
420 449 471
308 420 471
395 420 308
boundary_edges 158
45 46 3
26 27 3
28 29 3
31 32 3
14 15 3
52 53 2
51 52 2
50 51 2
44 45 3
42 43 3
43 44 3
39 40 3
40 41 3
23 24 3
20 21 3
27 28 3
29 30 3
30 31 3
60 61 3
58 59 3
59 60 3
56 57 2
57 58 3
55 56 2
53 54 2
54 55 2
63 64 3
62 63 3
34 35 3
74 75 3
78 79 3
77 78 3
70 71 3
69 70 3
111 112 1
112 113 1
13 14 3
12 13 3
17 18 3
108 109 1
87 88 3
86 87 3
88 89 3
84 85 3
85 86 3
46 47 3
47 48 3
48 49 2
49 50 2
41 42 3
67 68 3
66 67 3
68 69 3
38 39 3
83 84 3
82 83 3
25 26 3
24 25 3
22 23 3
21 22 3
64 65 3
61 62 3
32 33 3
33 34 3
75 76 3
76 77 3
81 82 3
117 0 1
0 1 3
1 2 3
114 115 1
116 117 1
115 116 1
4 5 3
5 6 3
7 8 3
9 10 3
11 12 3
10 11 3
19 20 3
18 19 3
16 17 3
15 16 3
107 108 1
104 105 3
105 106 1
101 102 3
102 103 3
109 110 1
110 111 1
96 97 3
97 98 3
98 99 3
8 9 3
92 93 3
90 91 3
89 90 3
93 94 3
94 95 3
65 66 3
35 36 3
37 38 3
36 37 3
79 80 3
80 81 3
73 74 3
113 114 1
6 7 3
106 107 1
103 104 3
100 101 3
99 100 3
95 96 3
91 92 3
3 4 3
2 3 3
150 149 4
71 72 3
72 73 3
142 141 4
137 136 4
134 133 4
151 150 4
149 148 4
148 147 4
147 146 4
146 145 4
155 154 4
152 151 4
124 123 4
128 127 4
125 124 4
126 125 4
141 140 4
139 138 4
138 137 4
143 142 4
130 129 4
131 130 4
136 135 4
135 134 4
153 152 4
154 153 4
120 119 4
121 120 4
122 121 4
123 122 4
157 156 4
156 155 4
129 128 4
127 126 4
140 139 4
145 144 4
144 143 4
132 131 4
133 132 4
119 118 4
118 157 4
)MESH";

}  // namespace splitfem::data
