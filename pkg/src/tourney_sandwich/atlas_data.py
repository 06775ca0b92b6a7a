"""Tables for the named sandwich constructions.

Each table lists the pattern path, then one line per component of the host
minus the pattern: ``weight | name:column ... | arcs``. A vertex in column i
maps to pattern vertex v_i; ``v<i>`` inside an arc is the pattern vertex itself.
Involutions and partitions are derived, not listed.
"""

D4_STAR = """
path 0>1 1>2 2>3 3>4
1/2 | u0p:0 u10:1 | u0p>v1 u0p>u10
1/2 | u2m:2 u32:3 | v1>u2m u2m>u32
1/2 | u12:1 u2p:2 | u2p>v3 u12>u2p
1/2 | u34:3 u4m:4 | v3>u4m u34>u4m
"""

D2_STAR = """
path 0>1 1>2
1/2 | u0:0 u1:1 u1p:1 u2:2 u2p:2 | u0>u1 u0>u1p u1>u2 u1p>u2p
"""

D3_STAR = """
path 0>1 1>2 2>3
1/4 | w1:1 w2:2 | w1>w2
1/4 | w2p:2 w3:3 | w2p>w3
1/2 | u0p:0 u10:1 | u0p>v1 u0p>u10
1/2 | u2m:2 u32:3 | v1>u2m u2m>u32
1/4 | u1p:1 | u1p>v2
1/4 | u3m:3 | v2>u3m
"""

D5_STAR = """
path 0>1 1>2 2>3 3>4 4>5
1/4 | u0p:0 u10:1 | u0p>v1 u0p>u10
1/4 | u2m:2 u32:3 | v1>u2m u2m>u32
1/4 | u4m:4 u34:3 | v3>u4m u34>u4m
1/4 | u2p:2 u12:1 | u2p>v3 u12>u2p
1/8 | y5m:5 | v4>y5m
1/8 | y3p:3 | y3p>v4
1/8 | y4m:4 | v3>y4m
1/8 | y2p:2 | y2p>v3
1/8 | z0p:0 z10:1 z20:2 | z0p>v1 z0p>z10 z10>z20
1/8 | z2m:2 z32:3 z42:4 | v1>z2m z2m>z32 z32>z42
1/8 | z1p:1 z21:2 z31:3 | z1p>v2 z1p>z21 z21>z31
1/8 | z3m:3 z43:4 z53:5 | v2>z3m z3m>z43 z43>z53
1/8 | w0:0 w1:1 w1p:1 | w0>w1 w0>w1p
1/8 | w4:4 w5:5 w5p:5 | w4>w5 w4>w5p
1/8 | w4p:4 w5pp:5 w5ppp:5 | w4p>w5pp w4p>w5ppp
1/8 | w4pp:4 w5pppp:5 w5ppppp:5 | w4pp>w5pppp w4pp>w5ppppp
"""

D4_DAGGER = """
path 0>1 1>2 2>3 3>4
1/4 | u0p:0 u10:1 u21:2 u10p:1 u21p:2 | u0p>v1 u0p>u10 u0p>u10p u10>u21 u10p>u21p
1/4 | u2m:2 u32:3 u32p:3 u43:4 u43p:4 | v1>u2m u2m>u32 u2m>u32p u32>u43 u32p>u43p
1/4 | y1p:1 | y1p>v2
1/4 | y3m:3 | v2>y3m
1/4 | y2p:2 | y2p>v3
1/4 | y4m:4 | v3>y4m
"""

D12_DDAGGER = """
path 0>1 1>2 2>3 3>4 4>5 5>6 6>7 7>8 8>9 9>10 10>11 11>12
1/4 | u0p:0 u10:1 u21:2 u10p:1 u21p:2 | u0p>v1 u0p>u10 u0p>u10p u10>u21 u10p>u21p
1/4 | u2m:2 u32:3 u32p:3 u43:4 u43p:4 | v1>u2m u2m>u32 u2m>u32p u32>u43 u32p>u43p
1/4 | y1p:1 | y1p>v2
1/4 | y2p:2 | y2p>v3
1/4 | y3m:3 | v2>y3m
1/4 | y4m:4 | v3>y4m
1/4 | u4p:4 u54:5 u65:6 u54p:5 u65p:6 | u4p>v5 u4p>u54 u4p>u54p u54>u65 u54p>u65p
1/4 | u6m:6 u76:7 u76p:7 u87:8 u87p:8 | v5>u6m u6m>u76 u6m>u76p u76>u87 u76p>u87p
1/4 | y5p:5 | y5p>v6
1/4 | y6p:6 | y6p>v7
1/4 | y7m:7 | v6>y7m
1/4 | y8m:8 | v7>y8m
1/4 | u8p:8 u98:9 u109:10 u98p:9 u109p:10 | u8p>v9 u8p>u98 u8p>u98p u98>u109 u98p>u109p
1/4 | u10m:10 u1110:11 u1110p:11 u1211:12 u1211p:12 | v9>u10m u10m>u1110 u10m>u1110p u1110>u1211 u1110p>u1211p
1/4 | y9p:9 | y9p>v10
1/4 | y10p:10 | y10p>v11
1/4 | y11m:11 | v10>y11m
1/4 | y12m:12 | v11>y12m
1/4 | y3p:3 | y3p>v4
1/4 | y5m:5 | v4>y5m
1/4 | y7p:7 | y7p>v8
1/4 | y9m:9 | v8>y9m
"""

D4_BAR = """
path 1>0 2>1 3>2 4>3
1/5 | u0p:0 u10:1 u21:2 u10p:1 u21p:2 | v1>u0p u10>u0p u10p>u0p u21>u10 u21p>u10p
1/5 | u2m:2 u32:3 u32p:3 u43:4 u43p:4 | u2m>v1 u32>u2m u32p>u2m u43>u32 u43p>u32p
1/5 | y1p:1 y21:2 | v2>y1p y21>y1p
1/5 | y3m:3 y43:4 | y3m>v2 y43>y3m
"""

D12_PARALLEL = """
path 1>0 2>1 3>2 4>3 5>4 6>5 7>6 8>7 9>8 10>9 11>10 12>11
1/5 | u0p:0 u10:1 u21:2 u10p:1 u21p:2 | v1>u0p u10>u0p u10p>u0p u21>u10 u21p>u10p
1/5 | u2m:2 u32:3 u32p:3 u43:4 u43p:4 | u2m>v1 u32>u2m u32p>u2m u43>u32 u43p>u32p
1/5 | y1p:1 y21:2 | v2>y1p y21>y1p
1/5 | y3m:3 y43:4 | y3m>v2 y43>y3m
1/5 | z2p:2 z32:3 | v3>z2p z32>z2p
1/5 | z4m:4 z54:5 | z4m>v3 z54>z4m
1/5 | u4p:4 u54:5 u65:6 u54p:5 u65p:6 | v5>u4p u54>u4p u54p>u4p u65>u54 u65p>u54p
1/5 | u6m:6 u76:7 u76p:7 u87:8 u87p:8 | u6m>v5 u76>u6m u76p>u6m u87>u76 u87p>u76p
1/5 | y5p:5 y65:6 | v6>y5p y65>y5p
1/5 | y7m:7 y87:8 | y7m>v6 y87>y7m
1/5 | z6p:6 z76:7 | v7>z6p z76>z6p
1/5 | z8m:8 z98:9 | z8m>v7 z98>z8m
1/5 | u8p:8 u98:9 u109:10 u98p:9 u109p:10 | v9>u8p u98>u8p u98p>u8p u109>u98 u109p>u98p
1/5 | u10m:10 u1110:11 u1110p:11 u1211:12 u1211p:12 | u10m>v9 u1110>u10m u1110p>u10m u1211>u1110 u1211p>u1110p
1/5 | y9p:9 y109:10 | v10>y9p y109>y9p
1/5 | y11m:11 y1211:12 | y11m>v10 y1211>y11m
1/5 | y3p:3 | v4>y3p
1/5 | y5m:5 | y5m>v4
1/5 | y7p:7 | v8>y7p
1/5 | y9m:9 | y9m>v8
"""

COVER_D8 = """
path 0>1 1>2 2>3 3>4 4>5 5>6 6>7 7>8
1/4 | u2p:2 u12:1 u12p:1 u02:0 | u2p>v3 u12>u2p u12p>u2p u02>u12
1/4 | u2m:2 | v1>u2m
1/4 | u0p:0 | u0p>v1
1/4 | u4m:4 u34:3 u34p:3 u24:2 | v3>u4m u34>u4m u34p>u4m u24>u34
1/4 | u1p:1 u01:0 | u1p>v2 u01>u1p
1/4 | u3m:3 u23:2 | v2>u3m u23>u3m
1/4 | u3p:3 | u3p>v4
1/4 | u5m:5 | v4>u5m
1/4 | u6m:6 u76:7 u76p:7 u86:8 | v5>u6m u6m>u76 u6m>u76p u76>u86
1/4 | u4p:4 u54:5 u54p:5 u64:6 | u4p>v5 u4p>u54 u4p>u54p u54>u64
1/4 | u8m:8 | v7>u8m
1/4 | u6p:6 | u6p>v7
1/4 | u7p:7 u87:8 | v6>u7p u7p>u87
1/4 | u5p:5 u65:6 | u5p>v6 u5p>u65
"""

COVER_D1_3 = """
path 0>1 2>1 3>2 4>3
1 | w0:0 w1:1 | w0>w1 v2>w1
1 | w3:3 w4:4 | w4>w3 w3>v2
"""

COVER_D10 = """
path 0>1 1>2 2>3 3>4 4>5 5>6 6>7 7>8 8>9 9>10
1/4 | u2p:2 u12:1 u12p:1 u02:0 | u2p>v3 u12>u2p u12p>u2p u02>u12
1/4 | u2m:2 | v1>u2m
1/4 | u0p:0 | u0p>v1
1/4 | u4m:4 u34:3 u34p:3 u24:2 | v3>u4m u34>u4m u34p>u4m u24>u34
1/4 | u1p:1 u01:0 | u1p>v2 u01>u1p
1/4 | u3m:3 u23:2 | v2>u3m u23>u3m
1/2 | u4p:4 | u4p>v5
1/2 | u6m:6 | v5>u6m
1/4 | u8m:8 u96:9 u96p:9 u106:10 | v7>u8m u8m>u96 u8m>u96p u96>u106
1/4 | u6p:6 u74:7 u74p:7 u84:8 | u6p>v7 u6p>u74 u6p>u74p u74>u84
1/4 | u10m:10 | v9>u10m
1/4 | u8p:8 | u8p>v9
1/4 | u9p:9 u109:10 | v8>u9p u9p>u109
1/4 | u7p:7 u87:8 | u7p>v8 u7p>u87
1/4 | u4pp:4 u34pp:3 u54:5 | u34pp>u4pp u4pp>u54 u4pp>v5
1/4 | u6mp:6 u76pp:7 u56:5 | u56>u6mp u6mp>u76pp v5>u6mp
"""

COVER_D2_4 = """
path 0>1 1>2 3>2 4>3 5>4 6>5
1/4 | u0p:0 | u0p>v1
1/4 | u2m:2 | v1>u2m
1/4 | z4m:4 z54:5 z54p:5 z64:6 z64p:6 | z4m>v3 z54>z4m z54p>z4m z64>z54 z64p>z54p
1/4 | z2p:2 z32:3 z32p:3 z42:4 z42p:4 | v3>z2p z32>z2p z32p>z2p z42>z32 z42p>z32p
1/4 | w4m:4 w54:5 w54p:5 w64:6 w64p:6 | w4m>v3 w54>w4m w54p>w4m w64>w54 w64p>w54p
1/4 | w2p:2 w12:1 w12p:1 w02:0 w02p:0 | v3>w2p w12>w2p w12p>w2p w02>w12 w02p>w12p
1/4 | y1:1 y2:2 | y1>y2
"""

COVER_D4_4_6 = """
path 0>1 1>2 2>3 3>4 5>4 6>5 7>6 8>7 8>9 9>10 10>11 11>12 12>13 13>14
1/4 | z2p:2 z12:1 z12p:1 z02:0 z02p:0 | z2p>v3 z12>z2p z12p>z2p z02>z12 z02p>z12p
1/4 | z4m:4 z34:3 z34p:3 z24:2 z24p:2 | v3>z4m z34>z4m z34p>z4m z24>z34 z24p>z34p
1/4 | u0p:0 | u0p>v1
1/4 | u2m:2 | v1>u2m
1/4 | u1p:1 | u1p>v2
1/4 | u3m:3 | v2>u3m
1/4 | z12pp:12 z1312:13 z1312p:13 z1412:14 z1412p:14 | v11>z12pp z12pp>z1312 z12pp>z1312p z1312>z1412 z1312p>z1412p
1/4 | z10m:10 z1110:11 z1110p:11 z1210:12 z1210p:12 | z10m>v11 z10m>z1110 z10m>z1110p z1110>z1210 z1110p>z1210p
1/4 | u14p:14 | v13>u14p
1/4 | u12m:12 | u12m>v13
1/4 | u13p:13 | v12>u13p
1/4 | u11m:11 | u11m>v12
1/4 | a10m:10 a1110:11 | v9>a10m a10m>a1110
1/4 | a8p:8 a98:9 | a8p>v9 a8p>a98
1/16 | u6p:6 | v7>u6p
1/16 | u8m:8 | u8m>v7
1/8 | x6p:6 x56:5 | v7>x6p x6p>x56
1/8 | x8m:8 x78:7 | x8m>v7 x8m>x78
1/8 | v8m:8 v98:9 v98p:9 v108:10 v108p:10 | v8m>v7 v8m>v98 v8m>v98p v98>v108 v98p>v108p
1/8 | v6p:6 v56:5 v56p:5 v46:4 v46p:4 | v7>v6p v6p>v56 v6p>v56p v56>v46 v56p>v46p
1/4 | g6p:6 g56:5 g46:4 g36:3 | v7>g6p g6p>g56 g56>g46 g36>g46
1/4 | g8m:8 g98:9 g98p:9 g108:10 | g8m>v7 g8m>g98 g98>g108 g98p>g108
1/16 | p8m:8 p78:7 p78p:7 p68:6 | p8m>v7 p8m>p78 p78>p68 p78p>p68
1/16 | q6p:6 q56:5 q56p:5 q46:4 | v7>q6p q6p>q56 q56>q46 q56p>q46
1/16 | r8m:8 r78:7 r78p:7 r68:6 | r68>v5 r8m>r78 r78>r68 r78p>r68
1/16 | s6p:6 s56:5 s56p:5 s46:4 | v5>s46 s6p>s56 s56>s46 s56p>s46
1/16 | f4p:4 f54:5 f64:6 f54p:5 f44:4 | v5>f4p f54>f4p f64>f54 f64>f54p f54p>f44
1/16 | e6m:6 e76:7 e86:8 e76p:7 e66:6 | e6m>v5 e76>e6m e86>e76 e86>e76p e76p>e66
"""

COVER_D3_4 = """
path 0>1 1>2 2>3 4>3 5>4 6>5 7>6
5/16 | u0p:0 | u0p>v1
5/16 | u2m:2 | v1>u2m
5/16 | u1p:1 u01:0 | u01>u1p u1p>v2
5/16 | u3m:3 u23:2 | u23>u3m v2>u3m
5/32 | u5m:5 u65:6 u75:7 | u5m>v4 u65>u5m u75>u65
5/32 | u3p:3 u43:4 u53:5 | v4>u3p u43>u3p u53>u43
1/4 | y5m:5 y65:6 y75:7 | y5m>v4 y65>y5m y75>y65
1/4 | y3p:3 y23:2 y13:1 | v4>y3p y23>y3p y13>y23
1/8 | z43:4 z3p:3 z23:2 z13:1 | v4>z3p z43>z3p z23>z3p z13>z23
1/8 | z65:6 z5m:5 z65p:6 z75:7 | z5m>v4 z65p>z5m z65>z5m z75>z65
1/16 | w7:7 w6:6 w5:5 | w7>w6 w6>w5 w6>v5
1/16 | w0:0 w1:1 w0p:0 | w0>w1 w0p>w1
1/16 | w5p:5 w4:4 w3:3 | w5p>w4 w4>w3 v5>w4
1/16 | w7p:7 w6p:6 w7pp:7 | w7p>w6p w7pp>w6p
1/32 | x5:5 x4:4 x3:3 | x5>x4 x4>x3 v6>x5
1/32 | x7:7 x6:6 x7p:7 | x7>x6 x7p>x6
1/32 | a7:7 a6:6 a5:5 | a7>a6 a6>a5 a7>v6
1/32 | b7:7 b6:6 b7p:7 | b7>b6 b7p>b6
1/32 | c6m:6 c56:5 c66:6 c76:7 | c6m>v5 c6m>c56 c66>c56 c76>c66
1/32 | c4p:4 c34:3 c44:4 c54:5 | v5>c4p c4p>c34 c44>c34 c54>c44
1/32 | d6m:6 d56:5 d66:6 d76:7 | d6m>v5 d76>d6m d66>d56 d76>d66
1/32 | d4p:4 d34:3 d44:4 d54:5 | v5>d4p d54>d4p d44>d34 d54>d44
"""

COVER_D3_8 = """
path 0>1 1>2 2>3 4>3 5>4 6>5 7>6 8>7 9>8 10>9 11>10
1/8 | u3p:3 u23:2 u23p:2 u13:1 u13p:1 | v4>u3p u23>u3p u23p>u3p u13>u23 u13p>u23p
1/4 | u2m:2 | v1>u2m
1/4 | u0p:0 | u0p>v1
1/8 | u5m:5 u65:6 u65p:6 u75:7 u75p:7 | u5m>v4 u65>u5m u65p>u5m u75>u65 u75p>u65p
1/4 | y1p:1 y01:0 | y1p>v2 y01>y1p
1/4 | y3m:3 y23:2 | v2>y3m y23>y3m
1/8 | y3p:3 y43:4 | v4>y3p y43>y3p
1/8 | y5m:5 y65:6 | y5m>v4 y65>y5m
1/4 | z3p:3 z23:2 z13:1 z03:0 | z03>z13 z13>z23 z23>z3p v4>z3p
1/4 | z5m:5 z65:6 z75:7 z85:8 | z85>z75 z75>z65 z65>z5m z5m>v4
1/8 | z5p:5 z45:4 z35:3 | v6>z5p z5p>z45 z45>z35
1/8 | z7m:7 z67:6 z57:5 | z7m>v6 z7m>z67 z67>z57
1/8 | w5m:5 w65:6 w65p:6 w75:7 | w5m>v4 w65>w5m w75>w65 w75>w65p
1/8 | w3p:3 w43p:4 w43:4 w53:5 | v4>w3p w43>w3p w53>w43 w53>w43p
1/4 | u9m:9 u109:10 u109p:10 u119:11 u119p:11 | u9m>v8 u109>u9m u109p>u9m u119>u109 u119p>u109p
1/4 | u7p:7 u87:8 u87p:8 u97:9 u97p:9 | v8>u7p u87>u7p u87p>u7p u97>u87 u97p>u87p
1/4 | u10m:10 | u10m>v9
1/4 | u8p:8 | v9>u8p
1/4 | u11m:11 | u11m>v10
1/4 | u9p:9 | v10>u9p
"""

COVER_D4_3 = """
path 0>1 1>2 2>3 3>4 5>4 6>5 7>6
1/4 | u2p:2 u12:1 u12p:1 u02:0 u02p:0 | u2p>v3 u12>u2p u12p>u2p u02>u12 u02p>u12p
1/4 | y2m:2 | v1>y2m
1/4 | y0p:0 | y0p>v1
1/4 | y3m:3 | v2>y3m
1/4 | y1p:1 | y1p>v2
1/4 | u4m:4 u34:3 u34p:3 u24:2 u24p:2 | v3>u4m u34>u4m u34p>u4m u24>u34 u24p>u34p
1/4 | y4p:4 | v5>y4p
1/4 | y6m:6 | y6m>v5
1/4 | u5p:5 | v6>u5p
1/4 | u7m:7 | u7m>v6
1/4 | u4p:4 u54:5 | v5>u4p u54>u4p
1/4 | u6m:6 u76:7 | u6m>v5 u76>u6m
1/4 | u4pp:4 u34pp:3 | v5>u4pp u34pp>u4pp
1/4 | u6mp:6 u76p:7 | u6mp>v5 u76p>u6mp
"""

COVER_D3_5 = """
path 0>1 1>2 2>3 4>3 5>4 6>5 7>6 8>7
5/8 | lt0:0 lt1:1 | lt0>lt1 lt1>v2
3/8 | lb0:0 lb1:1 lb2:2 lb3:3 | lb0>lb1 lb1>lb2 lb2>lb3 v4>lb3
5/8 | m0:3 m1:4 | v2>m0 m1>m0
1/8 | ul0:4 ul1:5 ul2:6 ul3:5 | v5>ul0 ul1>ul0 ul2>ul1 ul3>ul0
1/8 | ur0:6 ur1:7 ur2:8 ur3:7 | ur0>v5 ur1>ur0 ur2>ur1 ur3>ur0
1/8 | s1:5 | v6>s1
1/4 | s2:6 | v7>s2
1/8 | s3:7 | s3>v6
1/4 | rp:8 | rp>v7
3/8 | lr0:5 lr1:6 lr2:7 lr3:8 | lr0>v4 lr3>lr2 lr2>lr1 lr1>lr0
1/8 | bt0:4 bt1:5 bt2:6 bb0:4 bb1:5 | bt2>bt1 bt1>bt0 bt2>bb1 bb1>bb0
"""

COVER_D9_11 = """
path 0>1 1>2 2>3 3>4 4>5 5>6 6>7 7>8 8>9 10>9 11>10 12>11 13>12 14>13 15>14 16>15 17>16 18>17 19>18 20>19
5/54 | x0:0 | x0>v1
5/54 | x2:2 | v1>x2
5/54 | u0pL:1 u10L:2 u21L:3 u10pL:2 u21pL:3 | u0pL>v2 u0pL>u10L u0pL>u10pL u10L>u21L u10pL>u21pL
5/54 | u2mL:3 u32L:4 u32pL:4 u43L:5 u43pL:5 | v2>u2mL u2mL>u32L u2mL>u32pL u32L>u43L u32pL>u43pL
5/54 | y1pL:2 | y1pL>v3
5/54 | y2pL:3 | y2pL>v4
5/54 | y3mL:4 | v3>y3mL
5/54 | y4mL:5 | v4>y4mL
5/54 | u4pLL:5 u54LL:6 u65LL:7 u54pLL:6 u65pLL:7 | u4pLL>v6 u4pLL>u54LL u4pLL>u54pLL u54LL>u65LL u54pLL>u65pLL
5/54 | u6mLL:7 u76LL:8 u76pLL:8 u87LL:9 u87pLL:9 | v6>u6mLL u6mLL>u76LL u6mLL>u76pLL u76LL>u87LL u76pLL>u87pLL
5/54 | y5pLL:6 | y5pLL>v7
5/54 | y6pLL:7 | y6pLL>v8
5/54 | y7mLL:8 | v7>y7mLL
5/54 | y8mLL:9 | v8>y8mLL
5/54 | z4LL:4 | z4LL>v5
5/54 | z6LL:6 | v5>z6LL
2/27 | u0p:12 u10:13 u21:14 u10p:13 u21p:14 | v13>u0p u10>u0p u10p>u0p u21>u10 u21p>u10p
2/27 | u2m:14 u32:15 u32p:15 u43:16 u43p:16 | u2m>v13 u32>u2m u32p>u2m u43>u32 u43p>u32p
2/27 | y1p:13 y21:14 | v14>y1p y21>y1p
2/27 | y3m:15 y43:16 | y3m>v14 y43>y3m
2/27 | u0p2:16 u102:17 u212:18 u10p2:17 u21p2:18 | v17>u0p2 u102>u0p2 u10p2>u0p2 u212>u102 u21p2>u10p2
2/27 | u2m2:18 u322:19 u32p2:19 u432:20 u43p2:20 | u2m2>v17 u322>u2m2 u32p2>u2m2 u432>u322 u43p2>u32p2
2/27 | y1p2:17 y212:18 | v18>y1p2 y212>y1p2
2/27 | y3m2:19 y432:20 | y3m2>v18 y432>y3m2
2/27 | z15:15 | v16>z15
2/27 | z17:17 | z17>v16
2/27 | X14:14 X15:15 | v15>X14 X15>X14
2/27 | X16:16 X17:17 | X16>v15 X17>X16
1/36 | TL0:0 TL1:1 | TL0>TL1
1/54 | TM0:8 TM1:9 TM2:10 TM3:11 | TM0>TM1 TM2>TM1 TM3>TM2
2/27 | TR0:18 TR1:19 TR2:19 TR3:20 TR4:20 | TR1>TR0 TR2>TR0 TR3>TR1 TR4>TR2
2/27 | U9a:9 | v10>U9a
2/27 | U9b:11 | U9b>v10
2/27 | C1:8 C2:9 C3:10 C4:11 | v11>C3 C1>C2 C3>C2 C4>C3
2/27 | C5:12 C6:11 C7:12 C8:13 | C7>v11 C5>C6 C7>C6 C8>C7
2/27 | C9:9 C10:10 | v10>C9 C10>C9
2/27 | C11:11 C12:12 | C11>v10 C12>C11
1/27 | M11:11 M12a:12 M13a:13 M12b:12 M13b:13 | M13a>M12a M12a>M11 M13b>M12b M12b>M11 M11>v10
1/27 | M11x:9 M12ax:10 M13ax:11 M12bx:10 M13bx:11 | M13ax>M12ax M12ax>M11x M13bx>M12bx M12bx>M11x v10>M11x
7/54 | M11y:9 M12ay:10 M13ay:11 M12by:10 M13by:11 | M13ay>M12ay M12ay>M11y M13by>M12by M12by>M11y
17/54 | LU0:0 LU1:1 LU2:2 LU3:3 LU4:4 LU5:5 LU6:6 LU7:7 LU8:8 LL0:0 LL1:1 LL2:2 LL3:3 LL4:4 LL5:5 LL6:6 LL7:7 LL8:8 L9:9 | LU0>LU1 LU1>LU2 LU2>LU3 LU3>LU4 LU4>LU5 LU5>LU6 LU6>LU7 LU7>LU8 LL0>LL1 LL1>LL2 LL2>LL3 LL3>LL4 LL4>LL5 LL5>LL6 LL6>LL7 LL7>LL8 LL8>L9 LU8>L9 v10>L9
17/54 | RU0:20 RU1:19 RU2:18 RU3:17 RU4:16 RU5:15 RU6:14 RU7:13 RU8:12 RL0:20 RL1:19 RL2:18 RL3:17 RL4:16 RL5:15 RL6:14 RL7:13 RL8:12 R9:11 | RU0>RU1 RU1>RU2 RU2>RU3 RU3>RU4 RU4>RU5 RU5>RU6 RU6>RU7 RU7>RU8 RL0>RL1 RL1>RL2 RL2>RL3 RL3>RL4 RL4>RL5 RL5>RL6 RL6>RL7 RL7>RL8 RL8>R9 RU8>R9 R9>v10
"""
