"""Generated by tools/gen_tables.py; do not edit."""

import numpy as np

# Riemann-Siegel remainder coefficients C0..C4 as polynomials in (p - 1/2), low order first
RS_COEFFS = (
    np.array([
        0.38268343236508977173,
        0.0,
        1.7489618723100817974,
        0.0,
        2.1180252076854963732,
        0.0,
        -0.87072166705114807392,
        0.0,
        -3.4733112243465167073,
        0.0,
        -1.6626947308999324496,
        0.0,
        1.2167312889192321345,
        0.0,
        1.3014304161007975773,
        0.0,
        0.030511021827361672421,
        0.0,
        -0.37558030515450952428,
        0.0,
        -0.10857844165640659744,
        0.0,
        0.051832902999549623376,
        0.0,
        0.02999948061990227592,
        0.0,
        -0.002275939670612564226,
        0.0,
        -0.0043826474165803383059,
        0.0,
        -0.00040642301837298469931,
        0.0,
        0.00040060977854221139279,
        0.0,
        0.000089710579913888412978,
        0.0,
        -0.000023025650027239107116,
        -1.3732939599664559885e-39,
        -0.0000093800066019067924847,
        -2.1972703359463295773e-38,
        0.00000063235149476091075042,
        -3.5156325375141273229e-37,
        0.00000065510228192315016662,
        -5.6250120600226037165e-36,
        0.000000022105237455526972587,
        -9.0000192960361659464e-35,
        -0.00000003322316176445628835,
    ]),
    np.array([
        0.0,
        -0.05365020525675069406,
        0.0,
        0.1102781874108148244,
        0.0,
        1.2317200154315226313,
        0.0,
        1.2634964862799457884,
        0.0,
        -1.6951089975595030184,
        0.0,
        -2.999871196765010089,
        0.0,
        -0.10819944959899208643,
        0.0,
        1.9407662946212712688,
        0.0,
        0.78384235615006865329,
        0.0,
        -0.50548296679003659188,
        0.0,
        -0.38450723496057974051,
        0.0,
        0.037472646465315320676,
        0.0,
        0.090920266109731763173,
        0.0,
        0.010449237550064509218,
        0.0,
        -0.012582979651583416497,
        1.8534384923367979509e-40,
        -0.0033995037211512740851,
        3.5574061385174019499e-39,
        0.0010410950537714891268,
        6.7571693069592574875e-38,
        0.00050109490511184868604,
        1.2716349095763326447e-36,
        -0.000039563596690031815595,
        2.3732361328081769978e-35,
        -0.000047624592453571896387,
        4.3959635444631463157e-34,
        -0.0000018539355338085132273,
        8.0873475661203528038e-33,
        0.000003193691808006897204,
        1.4786338636746048847e-31,
        0.00000040907807608506066327,
        2.688113505207861402e-30,
        -0.00000015446624332576632128,
    ]),
    np.array([
        0.0051885428302931684938,
        0.0,
        0.0012378633552253898413,
        0.0,
        -0.18137505725166997411,
        0.0,
        0.14291492748532126541,
        0.0,
        1.3303391766687565325,
        0.0,
        0.35224723534037336775,
        0.0,
        -2.4210015958919507238,
        0.0,
        -1.6760787022538108853,
        0.0,
        1.3689416723328372184,
        0.0,
        1.5539019430222983221,
        0.0,
        -0.1722164273472998052,
        0.0,
        -0.6359068055045430989,
        0.0,
        -0.099116498730412081054,
        0.0,
        0.14033480067387008951,
        -2.3826453199065206147e-39,
        0.047823520198272922364,
        -5.5868786736882803775e-38,
        -0.017356040641479780798,
        -1.2802939817634813895e-36,
        -0.010225012534028591844,
        -2.8748379730973556954e-35,
        0.00092741491597948878994,
        -6.3391318258972361883e-34,
        0.0013572194372373385345,
        -1.3751907140850655726e-32,
        0.0000641369012029388009,
        -2.9396770430168586048e-31,
        -0.00012300805698196629883,
        -6.2005644073117196218e-30,
        -0.000018313507404789202555,
        -0.0000000000000000000000000001292024053439468364,
        0.0000078216286043226273085,
        -0.0000000000000000000000000026623517104303475931,
        0.0000020087542484759945503,
        -0.000000000000000000000000054301123572389280676,
        -0.00000033532765393185713791,
        -0.0000000000000000000000010971040882846014486,
        -0.0000001461602091741823201,
    ]),
    np.array([
        0.0,
        -0.0026794321814389138085,
        0.0,
        0.029953721091035149637,
        0.0,
        -0.042570172541828697985,
        0.0,
        -0.28997965779803887507,
        0.0,
        0.48888319992354459725,
        0.0,
        1.2308558763957460812,
        0.0,
        -0.82975607085274087042,
        0.0,
        -2.2497635366665668665,
        0.0,
        0.078451399610054713794,
        0.0,
        1.7467492800868894004,
        0.0,
        0.45968080979749935109,
        4.8064585602031755245e-40,
        -0.66193534710397749464,
        1.4711702826707348481e-38,
        -0.31590441036173634579,
        4.3093461648485268923e-37,
        0.12844792545207495989,
        1.2148145291371367932e-35,
        0.10073382716626152301,
        3.3109760099701289907e-34,
        -0.0095301838488252677595,
        8.7580211683227047461e-33,
        -0.019264421687514088898,
        2.2555328353606430269e-31,
        -0.0012464637158769291712,
        5.6710364632871114781e-30,
        0.002424396964110308574,
        0.00000000000000000000000000013952490178052643709,
        0.00043764769774185701828,
        0.0000000000000000000000000033657633107115484989,
        -0.00020714032687001791276,
        0.000000000000000000000000079746181233018887822,
        -0.000062743445041865155604,
        0.0000000000000000000000018586062510759309674,
        0.000011575343814595669368,
        0.000000000000000000000042667089050310809397,
        0.0000058838549245403802322,
        0.0000000000000000000009659094122219784076,
        -0.00000031246774006962353881,
        0.000000000000000000021585890966302980256,
        -0.00000040240657754967198298,
    ]),
    np.array([
        0.00046483389361763381854,
        0.0,
        -0.0040226429461361883039,
        0.0,
        0.0038471770517961268836,
        0.0,
        0.065811751358094860021,
        0.0,
        -0.19604124343694449118,
        0.0,
        -0.20854053686358853244,
        0.0,
        0.95077541851417509458,
        0.0,
        0.53415353129148739761,
        0.0,
        -1.6763494411763400796,
        0.0,
        -1.0767471578751289928,
        -1.1719790225484110912e-39,
        1.2353393016565969853,
        -4.7144927777047829744e-38,
        1.0257825340057275772,
        -1.773933119998261653e-36,
        -0.40124095793988544379,
        -6.3008581783012839449e-35,
        -0.5036663995108303448,
        -2.1282511019666412614e-33,
        0.035734877955027449858,
        -6.8774052044000214071e-32,
        0.14431763086785416624,
        -2.1368532359954456013e-30,
        0.015091527417903469417,
        -0.000000000000000000000000000064105052377208069482,
        -0.026098874779194361318,
        -0.00000000000000000000000000186345126576975047,
        -0.006126628379519261749,
        -0.000000000000000000000000052646410137074687085,
        0.0030775031298708411848,
        -0.0000000000000000000000014493684977891705517,
        0.0011562478934088752316,
        -0.000000000000000000000038970197767484645911,
        -0.00022775966758472127517,
        -0.0000000000000000000010253922129194973514,
        -0.00014189637118181445584,
        -0.000000000000000000026448839908170720716,
        0.0000074648603079556253432,
        -0.00000000000000000066980755113077034801,
        0.000012479701645401732595,
        -0.000000000000000016676812456346751294,
        0.00000048639451821783343366,
        -0.00000000000000040871865098415948857,
        -0.00000082102374584875209971,
        -0.000000000000009870928841783507614,
        -0.000000092232690374875004116,
        -0.00000000000023514721291222038115,
        0.000000041034360267000554878,
        -0.0000000000055303745678561487869,
        0.0000000076341923162169306809,
        -0.0000000001285140394807156305,
        -0.0000000028972293411521948719,
        -0.0000000029528714140198247312,
        -0.000000031529278757720713672,
        -0.00000006713129232423992423,
        -0.00000070301943916407246234,
        -0.0000015109696986831954832,
        -0.000015748497349238915094,
        -0.000033688253678581569618,
        -0.00034953674424409483346,
        -0.00074441533793476811342,
        -0.0076906739356777782164,
        -0.01631062866904155518,
        -0.16782272665777348664,
        -0.3545140119406969562,
        -3.633569128642440941,
        -7.6467693392295175995,
        -78.087292916825344245,
        -163.74431427830608527,
    ]),
)

# Gauss-Kronrod 21-point rule on [-1, 1] with embedded 10-point Gauss weights
GK_NODES = np.array([
    -0.99565716302580808074,
    -0.97390652851717172008,
    -0.930157491355708226,
    -0.86506336668898451073,
    -0.78081772658641689706,
    -0.67940956829902440623,
    -0.56275713466860468334,
    -0.4333953941292471908,
    -0.29439286270146019813,
    -0.14887433898163121088,
    0.0,
    0.14887433898163121088,
    0.29439286270146019813,
    0.4333953941292471908,
    0.56275713466860468334,
    0.67940956829902440623,
    0.78081772658641689706,
    0.86506336668898451073,
    0.930157491355708226,
    0.97390652851717172008,
    0.99565716302580808074,
])
GK_WEIGHTS = np.array([
    0.011694638867371874278,
    0.032558162307964727479,
    0.054755896574351996031,
    0.075039674810919952767,
    0.093125454583697605535,
    0.1093871588022976419,
    0.12349197626206585108,
    0.13470921731147332593,
    0.1427759385770600808,
    0.14773910490133849137,
    0.14944555400291690566,
    0.14773910490133849137,
    0.1427759385770600808,
    0.13470921731147332593,
    0.12349197626206585108,
    0.1093871588022976419,
    0.093125454583697605535,
    0.075039674810919952767,
    0.054755896574351996031,
    0.032558162307964727479,
    0.011694638867371874278,
])
G_WEIGHTS = np.array([
    0.0,
    0.066671344308688137594,
    0.0,
    0.14945134915058059315,
    0.0,
    0.219086362515982044,
    0.0,
    0.26926671930999635509,
    0.0,
    0.29552422471475287017,
    0.0,
    0.29552422471475287017,
    0.0,
    0.26926671930999635509,
    0.0,
    0.219086362515982044,
    0.0,
    0.14945134915058059315,
    0.0,
    0.066671344308688137594,
    0.0,
])
