// Reference values of erf and erfc computed with mpmath at 40 digits.
pub(super) const ERF_TABLE: &[(f64, f64, f64)] = &[
    (0.0, 0.0, 1.0),
    (0.05, 0.056371977797016626955, 0.94362802220298337304),
    (0.1, 0.1124629160182848984, 0.8875370839817151016),
    (0.15, 0.16799597142736348865, 0.83200402857263651135),
    (0.2, 0.22270258921047846618, 0.77729741078952153382),
    (0.25, 0.27632639016823693299, 0.72367360983176306701),
    (0.3, 0.32862675945912741619, 0.67137324054087258381),
    (0.35, 0.37938205356231029813, 0.62061794643768970187),
    (0.4, 0.42839235504666847645, 0.57160764495333152355),
    (0.45, 0.47548171978692368555, 0.52451828021307631445),
    (0.5, 0.52049987781304653768, 0.47950012218695346232),
    (0.55, 0.56332336632510899302, 0.43667663367489100698),
    (0.6, 0.60385609084792590508, 0.39614390915207409492),
    (0.65, 0.64202932735567185771, 0.35797067264432814229),
    (0.7, 0.67780119383741844228, 0.32219880616258155772),
    (0.75, 0.7111556336535151316, 0.2888443663464848684),
    (0.8, 0.74210096470766051259, 0.25789903529233948741),
    (0.85, 0.77066805760835252021, 0.22933194239164747979),
    (0.9, 0.79690821242283213966, 0.20309178757716786034),
    (0.95, 0.82089080727327792159, 0.17910919272672207841),
    (1.0, 0.84270079294971486934, 0.15729920705028513066),
    (1.05, 0.8624361060900967144, 0.1375638939099032856),
    (1.1, 0.88020506957408172966, 0.11979493042591827034),
    (1.15, 0.89612384293691498571, 0.10387615706308501429),
    (1.2, 0.91031397822963536837, 0.089686021770364631634),
    (1.25, 0.92290012825645823014, 0.077099871743541769863),
    (1.3, 0.93400794494065244585, 0.06599205505934755415),
    (1.35, 0.94376219612272407726, 0.056237803877275922736),
    (1.4, 0.9522851197626487964, 0.0477148802373512036),
    (1.45, 0.95969502563745922626, 0.040304974362540773744),
    (1.5, 0.96610514647531072707, 0.033894853524689272933),
    (1.55, 0.97162273326201254291, 0.028377266737987457093),
    (1.6, 0.97634838334464401552, 0.023651616655355984478),
    (1.65, 0.98037558502336028758, 0.019624414976639712423),
    (1.7, 0.98379045859077456084, 0.016209541409225439159),
    (1.75, 0.98667167121918244377, 0.013328328780817556228),
    (1.8, 0.98909050163573071615, 0.010909498364269283854),
    (1.85, 0.99111103005608570943, 0.0088889699439142905745),
    (1.9, 0.99279042923525746724, 0.0072095707647425327628),
    (1.95, 0.99417933359218911766, 0.0058206664078108823414),
    (2.0, 0.99532226501895273416, 0.0046777349810472658379),
    (2.05, 0.99625809604445687013, 0.0037419039555431298657),
    (2.1, 0.99702053334366701571, 0.0029794666563329842857),
    (2.15, 0.99763860703732534387, 0.0023613929626746561262),
    (2.2, 0.99813715370201811014, 0.0018628462979818898586),
    (2.25, 0.9985372834133188483, 0.0014627165866811516979),
    (2.3, 0.99885682340264334752, 0.0011431765973566524759),
    (2.35, 0.99911073296786754555, 0.00088926703213245444865),
    (2.4, 0.99931148610335492111, 0.00068851389664507888555),
    (2.45, 0.99946941988774894609, 0.00053058011225105390784),
    (2.5, 0.99959304798255504106, 0.00040695201744495893956),
    (2.55, 0.99968933965736080919, 0.00031066034263919080771),
    (2.6, 0.99976396558347065091, 0.00023603441652934908781),
    (2.65, 0.99982151224797599901, 0.00017848775202400099332),
    (2.7, 0.99986566726005947581, 0.00013433273994052419237),
    (2.75, 0.99989937807788036316, 0.0001006219221196368369),
    (2.8, 0.9999249868053345409, 0.00007501319466545910313),
    (2.85, 0.99994434372003860104, 0.000055656279961398957715),
    (2.9, 0.99995890212190054114, 0.000041097878099458857996),
    (2.95, 0.99996979695793586177, 0.000030203042064138229067),
    (3.0, 0.99997790950300141456, 0.000022090496998585441373),
    (3.05, 0.999983920174239833, 0.000016079825760166999115),
    (3.1, 0.99998835134263280041, 0.000011648657367199589313),
    (3.15, 0.99999160178868478407, 8.3982113152159347258e-6),
    (3.2, 0.99999397423884823791, 6.0257611517620878134e-6),
    (3.25, 0.99999569722053632488, 4.3027794636751218305e-6),
    (3.3, 0.99999694229020356183, 3.0577097964381651988e-6),
    (3.35, 0.99999783752317995982, 2.1624768200401819097e-6),
    (3.4, 0.99999847800663713771, 1.5219933628622863179e-6),
    (3.45, 0.99999893394820652622, 1.0660517934737797368e-6),
    (3.5, 0.99999925690162765859, 7.4309837234141274552e-7),
    (3.55, 0.9999994845161753662, 5.15483824633795706e-7),
    (3.6, 0.99999964413700699231, 3.5586299300768506304e-7),
    (3.65, 0.99999975551734942462, 2.4448265057537748853e-7),
    (3.7, 0.99999983284894209085, 1.6715105790914597513e-7),
    (3.75, 0.9999998862727434302, 1.1372725656979665326e-7),
    (3.8, 0.99999992299607254304, 7.7003927456964236041e-8),
    (3.85, 0.99999994811370658953, 5.1886293410472544171e-8),
    (3.9, 0.99999996520775140277, 3.4792248597231767129e-8),
    (3.95, 0.99999997678326776335, 2.3216732236649273894e-8),
    (4.0, 0.99999998458274209972, 1.5417257900280018852e-8),
    (4.05, 0.99999998981175506646, 1.0188244933541045317e-8),
    (4.1, 0.99999999329997234592, 6.7000276540849184417e-9),
    (4.15, 0.99999999561532295225, 4.3846770477538069657e-9),
    (4.2, 0.99999999714450582041, 2.8554941795921842402e-9),
    (4.25, 0.99999999814942586261, 1.8505741373867425201e-9),
    (4.3, 0.99999999880652820628, 1.1934717937220431741e-9),
    (4.35, 0.99999999923405560116, 7.6594439884220994586e-10),
    (4.4, 0.99999999951082897294, 4.8917102706058727478e-10),
    (4.45, 0.99999999968911367692, 3.1088632307623581431e-10),
    (4.5, 0.99999999980338395585, 1.9661604415428874763e-10),
    (4.55, 0.99999999987625951732, 1.2374048267630344453e-10),
    (4.6, 0.99999999992250400403, 7.7495995974418577945e-11),
    (4.65, 0.99999999995170296755, 4.8297032450911079415e-11),
    (4.7, 0.99999999997004740214, 2.9952597863796552106e-11),
    (4.75, 0.99999999998151495228, 1.8485047721485310887e-11),
    (4.8, 0.99999999998864785642, 1.1352143584921980717e-11),
    (4.85, 0.99999999999306245835, 6.9375416546258264969e-12),
    (4.9, 0.99999999999578106348, 4.2189365240057664465e-12),
    (4.95, 0.9999999999974468914, 2.5531086028512759801e-12),
    (5.0, 0.99999999999846254021, 1.5374597944280348502e-12),
    (5.05, 0.99999999999907869015, 9.2130985414546315685e-13),
    (5.1, 0.99999999999945061798, 5.4938202175553198746e-13),
    (5.15, 0.99999999999967400625, 3.2599375009408010581e-13),
    (5.2, 0.99999999999980750939, 1.9249061099972323498e-13),
    (5.25, 0.99999999999988689687, 1.1310313266887153883e-13),
    (5.3, 0.99999999999993386918, 6.6130818503408109285e-14),
    (5.35, 0.9999999999999615234, 3.8476604049593344724e-14),
    (5.4, 0.99999999999997772321, 2.2276786794677860964e-14),
    (5.45, 0.99999999999998716574, 1.2834257871870466341e-14),
    (5.5, 0.99999999999999264215, 7.3578479179743980631e-15),
    (5.55, 0.99999999999999580249, 4.1975138167471584181e-15),
    (5.6, 0.99999999999999761716, 2.3828362845830279952e-15),
    (5.65, 0.99999999999999865396, 1.346035432785618022e-15),
    (5.7, 0.99999999999999924338, 7.5662116218624858116e-16),
    (5.75, 0.99999999999999957679, 4.2321366174257376259e-16),
    (5.8, 0.99999999999999976444, 2.3555893751564415729e-16),
    (5.85, 0.99999999999999986953, 1.3046611497637015944e-16),
    (5.9, 0.9999999999999999281, 7.1904097835504777249e-17),
    (5.95, 0.99999999999999996057, 3.9433639773396699529e-17),
    (6.0, 0.99999999999999997848, 2.1519736712498913117e-17),
    (1e-10, 1.128379167095512615e-10, 0.99999999988716208329),
    (0.3, 0.32862675945912741619, 0.67137324054087258381),
    (0.84375, 0.76722566123234163346, 0.23277433876765836654),
    (0.84374, 0.76722012418324061511, 0.23277987581675938489),
    (1.25, 0.92290012825645823014, 0.077099871743541769863),
    (1.2499, 0.92287647318753193666, 0.077123526812468063338),
    (
        2.857142857142857,
        0.99994668768861167721,
        0.000053312311388322794271,
    ),
    (2.86, 0.9999475988269556022, 0.000052401173044397802579),
    (5.999, 0.99999999999999997822, 2.1783043429548018229e-17),
    (0.6174, 0.61741074841139407434, 0.38258925158860592566),
];
