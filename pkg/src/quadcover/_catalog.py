"""Best-known equal-circle packings of the unit square (m = 2..15, non-grid).

Generated by tools/gen_packings.py; radii agree with the published
best-known values to better than 1e-10. Radii are truncated to 10
significant digits so the stored configurations stay feasible.
"""

CATALOG = {
    2: (0.2928932188, [
        (0.292893218813, 0.292893218813),
        (0.707106781187, 0.707106781187),
    ]),
    3: (0.254333095, [
        (0.254333095030, 0.254333095030),
        (0.745666904970, 0.385985592618),
        (0.385985592618, 0.745666904970),
    ]),
    5: (0.2071067811, [
        (0.207106781187, 0.207106781187),
        (0.792893218813, 0.207106781187),
        (0.500000000000, 0.500000000000),
        (0.207106781187, 0.792893218813),
        (0.792893218813, 0.792893218813),
    ]),
    6: (0.1876806011, [
        (0.187680601147, 0.187680601147),
        (0.812319398853, 0.187680601147),
        (0.500000000000, 0.395893533716),
        (0.187680601147, 0.604106466284),
        (0.812319398853, 0.604106466284),
        (0.500000000000, 0.812319398853),
    ]),
    7: (0.1744576301, [
        (0.348915260374, 0.174457630187),
        (0.707944194192, 0.180525660435),
        (0.174457630187, 0.476627109439),
        (0.523372890561, 0.476627109439),
        (0.825542369813, 0.651084739626),
        (0.523372890561, 0.825542369813),
        (0.174457630187, 0.825542369813),
    ]),
    8: (0.1705406887, [
        (0.170540688701, 0.170540688701),
        (0.829459311299, 0.170540688701),
        (0.500000000000, 0.258819045103),
        (0.741180954897, 0.500000000000),
        (0.258819045103, 0.500000000000),
        (0.500000000000, 0.741180954897),
        (0.170540688701, 0.829459311299),
        (0.829459311299, 0.829459311299),
    ]),
    10: (0.1482043225, [
        (0.586548809415, 0.148204322565),
        (0.148204322565, 0.148204322565),
        (0.851795677435, 0.280500142278),
        (0.367376565990, 0.347757855784),
        (0.148204322565, 0.547311389004),
        (0.851795677435, 0.576908787409),
        (0.555387032304, 0.576908787409),
        (0.148204322565, 0.843720034134),
        (0.444502936962, 0.851795677435),
        (0.740911582092, 0.851795677435),
    ]),
    11: (0.1423992376, [
        (0.545165104138, 0.142399237696),
        (0.142399237696, 0.142399237696),
        (0.835600787728, 0.156765441673),
        (0.343782170917, 0.343782170917),
        (0.618876373585, 0.417493440364),
        (0.142399237696, 0.545165104138),
        (0.857600762304, 0.572802286913),
        (0.417493440364, 0.618876373585),
        (0.236674260898, 0.857599021074),
        (0.572802286913, 0.857600762304),
        (0.857600762304, 0.857600762304),
    ]),
    12: (0.139958844, [
        (0.283975306423, 0.139958844038),
        (0.572008231192, 0.139958844038),
        (0.860041155962, 0.139958844038),
        (0.139958844038, 0.379986281346),
        (0.716024693577, 0.379986281346),
        (0.427991768808, 0.379986281346),
        (0.572008231192, 0.620013718654),
        (0.283975306423, 0.620013718654),
        (0.860041155962, 0.620013718654),
        (0.139958844038, 0.860041155962),
        (0.427991768808, 0.860041155962),
        (0.716024693577, 0.860041155962),
    ]),
    13: (0.1339935134, [
        (0.409757073500, 0.133993513499),
        (0.866006486501, 0.133993513499),
        (0.141770046502, 0.133993513499),
        (0.637881780000, 0.274621266532),
        (0.133993513499, 0.401867685777),
        (0.402032220146, 0.401869181076),
        (0.866006486501, 0.415249019566),
        (0.538433453394, 0.632547910009),
        (0.268011572188, 0.633937086139),
        (0.866006486501, 0.683236046564),
        (0.133993513499, 0.866006486501),
        (0.402029630878, 0.866006486501),
        (0.670016657876, 0.866006486501),
    ]),
    14: (0.1293317937, [
        (0.258663587420, 0.129331793710),
        (0.517327174840, 0.129331793710),
        (0.870051619485, 0.129659576541),
        (0.129331793710, 0.353341031450),
        (0.387995381130, 0.353341031450),
        (0.646658968550, 0.353341031450),
        (0.870668206290, 0.482672825160),
        (0.129331793710, 0.612004618870),
        (0.387995381130, 0.612004618870),
        (0.646658968550, 0.612004618870),
        (0.870668206290, 0.741336412580),
        (0.129331793710, 0.870668206290),
        (0.387995381130, 0.870668206290),
        (0.646658968550, 0.870668206290),
    ]),
    15: (0.1271665475, [
        (0.127166547515, 0.127166547515),
        (0.381499642545, 0.127166547515),
        (0.872833452485, 0.127166547515),
        (0.627166547515, 0.192992796309),
        (0.807007203691, 0.372833452485),
        (0.192992796309, 0.372833452485),
        (0.447325891339, 0.372833452485),
        (0.627166547515, 0.552674108661),
        (0.127166547515, 0.618500357455),
        (0.381499642545, 0.618500357455),
        (0.872833452485, 0.618500357455),
        (0.627166547515, 0.807007203691),
        (0.127166547515, 0.872833452485),
        (0.381499642545, 0.872833452485),
        (0.872833452485, 0.872833452485),
    ]),
}
