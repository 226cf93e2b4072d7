#pragma once

// Generated by tools/derive_params.py from data/halls_params.txt.

namespace halls {

inline constexpr const char* kDefaultParamsText = R"params(# LLC energy/latency parameters, 22nm, 2GHz.
# One record per (device, size, ways, line). Units: nJ per access, mW, cycles.
# source=measured: measured rows, copied verbatim.
# source=derived: log-linear least-squares completion (tools/derive_params.py).
# hit_cycles_alt: alternate hit latency for the tuned-configuration rows.
device=SRAM size=1M ways=16 line=64 write_nJ=0.338 hit_nJ=5.318 leakage_mW=3234.916 hit_cycles=2 write_cycles=2 source=measured
device=STT-100us size=1M ways=16 line=64 write_nJ=0.392 hit_nJ=5.794 leakage_mW=2200.032 hit_cycles=2 write_cycles=3 source=measured
device=STT-1ms size=1M ways=16 line=64 write_nJ=0.404 hit_nJ=5.794 leakage_mW=2200.032 hit_cycles=2 write_cycles=4 source=measured
device=STT-10ms size=1M ways=16 line=64 write_nJ=0.419 hit_nJ=5.794 leakage_mW=2200.032 hit_cycles=2 write_cycles=6 source=measured
device=STT-100ms size=1M ways=16 line=64 write_nJ=0.438 hit_nJ=5.794 leakage_mW=2200.032 hit_cycles=2 write_cycles=7 source=measured
device=SRAM size=1M ways=8 line=64 write_nJ=0.285 hit_nJ=2.261 leakage_mW=2839.156 hit_cycles=2 write_cycles=2 hit_cycles_alt=1 source=measured
device=STT-100us size=1M ways=8 line=64 write_nJ=0.256 hit_nJ=1.841 leakage_mW=1432.367 hit_cycles=2 write_cycles=3 hit_cycles_alt=1 source=measured
device=STT-1ms size=1M ways=8 line=64 write_nJ=0.268 hit_nJ=1.841 leakage_mW=1432.367 hit_cycles=2 write_cycles=4 hit_cycles_alt=1 source=measured
device=STT-10ms size=1M ways=8 line=64 write_nJ=0.283 hit_nJ=1.841 leakage_mW=1432.367 hit_cycles=2 write_cycles=6 hit_cycles_alt=1 source=measured
device=STT-100ms size=1M ways=8 line=64 write_nJ=0.301 hit_nJ=1.841 leakage_mW=1432.367 hit_cycles=2 write_cycles=7 hit_cycles_alt=1 source=measured
device=SRAM size=1M ways=4 line=64 write_nJ=0.354 hit_nJ=1.415 leakage_mW=3228.278 hit_cycles=2 write_cycles=2 hit_cycles_alt=1 source=measured
device=STT-100us size=1M ways=4 line=64 write_nJ=0.278 hit_nJ=1.035 leakage_mW=2767.573 hit_cycles=2 write_cycles=3 hit_cycles_alt=1 source=measured
device=STT-1ms size=1M ways=4 line=64 write_nJ=0.29 hit_nJ=1.035 leakage_mW=2767.573 hit_cycles=2 write_cycles=4 hit_cycles_alt=1 source=measured
device=STT-10ms size=1M ways=4 line=64 write_nJ=0.305 hit_nJ=1.035 leakage_mW=2767.573 hit_cycles=2 write_cycles=6 hit_cycles_alt=1 source=measured
device=STT-100ms size=1M ways=4 line=64 write_nJ=0.323 hit_nJ=1.035 leakage_mW=2767.573 hit_cycles=2 write_cycles=7 hit_cycles_alt=1 source=measured
device=SRAM size=1M ways=2 line=64 write_nJ=0.329 hit_nJ=0.663 leakage_mW=2276.707 hit_cycles=2 write_cycles=2 hit_cycles_alt=1 source=measured
device=STT-100us size=1M ways=2 line=64 write_nJ=0.25 hit_nJ=0.464 leakage_mW=1472.512 hit_cycles=2 write_cycles=3 hit_cycles_alt=1 source=measured
device=STT-1ms size=1M ways=2 line=64 write_nJ=0.263 hit_nJ=0.466 leakage_mW=1475.038 hit_cycles=2 write_cycles=4 hit_cycles_alt=1 source=measured
device=STT-10ms size=1M ways=2 line=64 write_nJ=0.278 hit_nJ=0.467 leakage_mW=1477.564 hit_cycles=2 write_cycles=6 hit_cycles_alt=1 source=measured
device=STT-100ms size=1M ways=2 line=64 write_nJ=0.292 hit_nJ=0.458 leakage_mW=1456.263 hit_cycles=2 write_cycles=7 hit_cycles_alt=1 source=measured
device=SRAM size=1M ways=1 line=64 write_nJ=0.335 hit_nJ=0.344 leakage_mW=1866.193 hit_cycles=2 write_cycles=2 hit_cycles_alt=1 source=measured
device=STT-100us size=1M ways=1 line=64 write_nJ=0.244 hit_nJ=0.228 leakage_mW=982.701 hit_cycles=2 write_cycles=3 hit_cycles_alt=1 source=measured
device=STT-1ms size=1M ways=1 line=64 write_nJ=0.257 hit_nJ=0.229 leakage_mW=983.986 hit_cycles=2 write_cycles=4 hit_cycles_alt=1 source=measured
device=STT-10ms size=1M ways=1 line=64 write_nJ=0.273 hit_nJ=0.229 leakage_mW=985.271 hit_cycles=2 write_cycles=6 hit_cycles_alt=1 source=measured
device=STT-100ms size=1M ways=1 line=64 write_nJ=0.291 hit_nJ=0.23 leakage_mW=986.555 hit_cycles=2 write_cycles=7 hit_cycles_alt=1 source=measured
device=SRAM size=1M ways=16 line=32 write_nJ=0.191 hit_nJ=3.076 leakage_mW=3334.241 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=1M ways=16 line=32 write_nJ=0.206 hit_nJ=3.069 leakage_mW=2042.633 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=1M ways=16 line=32 write_nJ=0.206 hit_nJ=2.954 leakage_mW=1924.197 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=1M ways=16 line=32 write_nJ=0.212 hit_nJ=2.954 leakage_mW=1924.497 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=1M ways=16 line=32 write_nJ=0.223 hit_nJ=2.958 leakage_mW=1926.167 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=1M ways=8 line=32 write_nJ=0.185 hit_nJ=1.502 leakage_mW=2808.132 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=1M ways=8 line=32 write_nJ=0.179 hit_nJ=1.336 leakage_mW=1621.972 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=1M ways=8 line=32 write_nJ=0.183 hit_nJ=1.302 leakage_mW=1555.644 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=1M ways=8 line=32 write_nJ=0.19 hit_nJ=1.302 leakage_mW=1556.339 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=1M ways=8 line=32 write_nJ=0.201 hit_nJ=1.304 leakage_mW=1556.71 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=1M ways=4 line=32 write_nJ=0.179 hit_nJ=0.733 leakage_mW=2365.037 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=1M ways=4 line=32 write_nJ=0.157 hit_nJ=0.582 leakage_mW=1287.942 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=1M ways=4 line=32 write_nJ=0.162 hit_nJ=0.574 leakage_mW=1257.682 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=1M ways=4 line=32 write_nJ=0.17 hit_nJ=0.574 leakage_mW=1258.61 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=1M ways=4 line=32 write_nJ=0.181 hit_nJ=0.575 leakage_mW=1258.119 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=1M ways=2 line=32 write_nJ=0.173 hit_nJ=0.358 leakage_mW=1991.859 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=1M ways=2 line=32 write_nJ=0.137 hit_nJ=0.253 leakage_mW=1022.702 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=1M ways=2 line=32 write_nJ=0.144 hit_nJ=0.253 leakage_mW=1016.791 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=1M ways=2 line=32 write_nJ=0.152 hit_nJ=0.253 leakage_mW=1017.837 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=1M ways=2 line=32 write_nJ=0.163 hit_nJ=0.253 leakage_mW=1016.8 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=1M ways=1 line=32 write_nJ=0.179 hit_nJ=0.188 leakage_mW=1745.328 hit_cycles=2 write_cycles=2 hit_cycles_alt=1 source=measured
device=STT-100us size=1M ways=1 line=32 write_nJ=0.128 hit_nJ=0.12 leakage_mW=762.778 hit_cycles=2 write_cycles=3 hit_cycles_alt=1 source=measured
device=STT-1ms size=1M ways=1 line=32 write_nJ=0.135 hit_nJ=0.121 leakage_mW=763.444 hit_cycles=2 write_cycles=4 hit_cycles_alt=1 source=measured
device=STT-10ms size=1M ways=1 line=32 write_nJ=0.143 hit_nJ=0.121 leakage_mW=764.109 hit_cycles=2 write_cycles=6 hit_cycles_alt=1 source=measured
device=STT-100ms size=1M ways=1 line=32 write_nJ=0.153 hit_nJ=0.122 leakage_mW=764.775 hit_cycles=2 write_cycles=7 hit_cycles_alt=1 source=measured
device=SRAM size=1M ways=16 line=16 write_nJ=0.1 hit_nJ=1.648 leakage_mW=2926.664 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=1M ways=16 line=16 write_nJ=0.11 hit_nJ=1.643 leakage_mW=1556.886 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=1M ways=16 line=16 write_nJ=0.111 hit_nJ=1.574 leakage_mW=1455.649 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=1M ways=16 line=16 write_nJ=0.114 hit_nJ=1.574 leakage_mW=1456.146 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=1M ways=16 line=16 write_nJ=0.121 hit_nJ=1.58 leakage_mW=1459.926 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=1M ways=8 line=16 write_nJ=0.097 hit_nJ=0.804 leakage_mW=2464.866 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=1M ways=8 line=16 write_nJ=0.096 hit_nJ=0.715 leakage_mW=1236.26 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=1M ways=8 line=16 write_nJ=0.098 hit_nJ=0.694 leakage_mW=1176.84 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=1M ways=8 line=16 write_nJ=0.102 hit_nJ=0.694 leakage_mW=1177.584 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=1M ways=8 line=16 write_nJ=0.109 hit_nJ=0.696 leakage_mW=1179.899 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=1M ways=4 line=16 write_nJ=0.094 hit_nJ=0.393 leakage_mW=2075.936 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=1M ways=4 line=16 write_nJ=0.084 hit_nJ=0.311 leakage_mW=981.664 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=1M ways=4 line=16 write_nJ=0.087 hit_nJ=0.306 leakage_mW=951.433 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=1M ways=4 line=16 write_nJ=0.091 hit_nJ=0.306 leakage_mW=952.312 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=1M ways=4 line=16 write_nJ=0.098 hit_nJ=0.307 leakage_mW=953.583 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=1M ways=2 line=16 write_nJ=0.09 hit_nJ=0.192 leakage_mW=1748.374 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=1M ways=2 line=16 write_nJ=0.073 hit_nJ=0.136 leakage_mW=779.5 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=1M ways=2 line=16 write_nJ=0.077 hit_nJ=0.135 leakage_mW=769.199 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=1M ways=2 line=16 write_nJ=0.082 hit_nJ=0.135 leakage_mW=770.134 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=1M ways=2 line=16 write_nJ=0.088 hit_nJ=0.135 leakage_mW=770.677 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=1M ways=1 line=16 write_nJ=0.088 hit_nJ=0.094 leakage_mW=1472.498 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=1M ways=1 line=16 write_nJ=0.064 hit_nJ=0.059 leakage_mW=618.969 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=1M ways=1 line=16 write_nJ=0.069 hit_nJ=0.059 leakage_mW=621.87 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=1M ways=1 line=16 write_nJ=0.073 hit_nJ=0.059 leakage_mW=622.806 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=1M ways=1 line=16 write_nJ=0.079 hit_nJ=0.06 leakage_mW=622.854 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=512K ways=16 line=64 write_nJ=0.309 hit_nJ=4.871 leakage_mW=2268.544 hit_cycles=2 write_cycles=2 hit_cycles_alt=1 source=measured
device=STT-100us size=512K ways=16 line=64 write_nJ=0.375 hit_nJ=5.577 leakage_mW=1880.816 hit_cycles=2 write_cycles=3 hit_cycles_alt=1 source=measured
device=STT-1ms size=512K ways=16 line=64 write_nJ=0.351 hit_nJ=4.953 leakage_mW=1566.491 hit_cycles=2 write_cycles=4 hit_cycles_alt=1 source=measured
device=STT-10ms size=512K ways=16 line=64 write_nJ=0.367 hit_nJ=4.953 leakage_mW=1566.491 hit_cycles=2 write_cycles=6 hit_cycles_alt=1 source=measured
device=STT-100ms size=512K ways=16 line=64 write_nJ=0.385 hit_nJ=4.953 leakage_mW=1566.491 hit_cycles=2 write_cycles=7 hit_cycles_alt=1 source=measured
device=SRAM size=512K ways=8 line=64 write_nJ=0.252 hit_nJ=1.998 leakage_mW=1814.694 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=512K ways=8 line=64 write_nJ=0.264 hit_nJ=1.913 leakage_mW=1269.359 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=512K ways=8 line=64 write_nJ=0.271 hit_nJ=1.869 leakage_mW=1224.217 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=512K ways=8 line=64 write_nJ=0.288 hit_nJ=1.869 leakage_mW=1224.298 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=512K ways=8 line=64 write_nJ=0.307 hit_nJ=1.867 leakage_mW=1223.347 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=512K ways=4 line=64 write_nJ=0.244 hit_nJ=0.975 leakage_mW=1528.354 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=512K ways=4 line=64 write_nJ=0.23 hit_nJ=0.833 leakage_mW=1007.946 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=512K ways=4 line=64 write_nJ=0.241 hit_nJ=0.824 leakage_mW=989.735 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=512K ways=4 line=64 write_nJ=0.257 hit_nJ=0.824 leakage_mW=990.089 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=512K ways=4 line=64 write_nJ=0.276 hit_nJ=0.823 leakage_mW=988.698 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=512K ways=2 line=64 write_nJ=0.236 hit_nJ=0.476 leakage_mW=1287.195 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=512K ways=2 line=64 write_nJ=0.201 hit_nJ=0.363 leakage_mW=800.369 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=512K ways=2 line=64 write_nJ=0.214 hit_nJ=0.363 leakage_mW=800.165 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=512K ways=2 line=64 write_nJ=0.23 hit_nJ=0.363 leakage_mW=800.684 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=512K ways=2 line=64 write_nJ=0.248 hit_nJ=0.363 leakage_mW=799.056 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=512K ways=1 line=64 write_nJ=0.228 hit_nJ=0.232 leakage_mW=1084.089 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=512K ways=1 line=64 write_nJ=0.175 hit_nJ=0.158 leakage_mW=635.541 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=512K ways=1 line=64 write_nJ=0.19 hit_nJ=0.16 leakage_mW=646.905 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=512K ways=1 line=64 write_nJ=0.206 hit_nJ=0.16 leakage_mW=647.513 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=512K ways=1 line=64 write_nJ=0.224 hit_nJ=0.16 leakage_mW=645.79 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=512K ways=16 line=32 write_nJ=0.137 hit_nJ=2.192 leakage_mW=1891.293 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=512K ways=16 line=32 write_nJ=0.162 hit_nJ=2.353 leakage_mW=1218.423 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=512K ways=16 line=32 write_nJ=0.164 hit_nJ=2.259 leakage_mW=1145.525 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=512K ways=16 line=32 write_nJ=0.173 hit_nJ=2.259 leakage_mW=1145.481 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=512K ways=16 line=32 write_nJ=0.185 hit_nJ=2.262 leakage_mW=1147.289 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=512K ways=8 line=32 write_nJ=0.132 hit_nJ=1.07 leakage_mW=1592.866 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=512K ways=8 line=32 write_nJ=0.142 hit_nJ=1.024 leakage_mW=967.5 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=512K ways=8 line=32 write_nJ=0.146 hit_nJ=0.996 leakage_mW=926.116 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=512K ways=8 line=32 write_nJ=0.154 hit_nJ=0.996 leakage_mW=926.35 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=512K ways=8 line=32 write_nJ=0.166 hit_nJ=0.997 leakage_mW=927.228 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=512K ways=4 line=32 write_nJ=0.128 hit_nJ=0.522 leakage_mW=1341.528 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=512K ways=4 line=32 write_nJ=0.124 hit_nJ=0.446 leakage_mW=768.253 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=512K ways=4 line=32 write_nJ=0.13 hit_nJ=0.439 leakage_mW=748.731 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=512K ways=4 line=32 write_nJ=0.138 hit_nJ=0.439 leakage_mW=749.138 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=512K ways=4 line=32 write_nJ=0.15 hit_nJ=0.439 leakage_mW=749.377 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=512K ways=2 line=32 write_nJ=0.124 hit_nJ=0.255 leakage_mW=1129.849 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=512K ways=2 line=32 write_nJ=0.108 hit_nJ=0.194 leakage_mW=610.038 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=512K ways=2 line=32 write_nJ=0.115 hit_nJ=0.194 leakage_mW=605.322 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=512K ways=2 line=32 write_nJ=0.124 hit_nJ=0.194 leakage_mW=605.828 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=512K ways=2 line=32 write_nJ=0.135 hit_nJ=0.194 leakage_mW=605.64 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=512K ways=1 line=32 write_nJ=0.12 hit_nJ=0.125 leakage_mW=951.57 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=512K ways=1 line=32 write_nJ=0.094 hit_nJ=0.084 leakage_mW=484.407 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=512K ways=1 line=32 write_nJ=0.102 hit_nJ=0.085 leakage_mW=489.381 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=512K ways=1 line=32 write_nJ=0.111 hit_nJ=0.085 leakage_mW=489.932 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=512K ways=1 line=32 write_nJ=0.121 hit_nJ=0.085 leakage_mW=489.472 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=512K ways=16 line=16 write_nJ=0.072 hit_nJ=1.174 leakage_mW=1660.102 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=512K ways=16 line=16 write_nJ=0.087 hit_nJ=1.26 leakage_mW=928.677 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=512K ways=16 line=16 write_nJ=0.088 hit_nJ=1.204 leakage_mW=866.586 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=512K ways=16 line=16 write_nJ=0.093 hit_nJ=1.203 leakage_mW=866.714 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=512K ways=16 line=16 write_nJ=0.1 hit_nJ=1.208 leakage_mW=869.581 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=512K ways=8 line=16 write_nJ=0.069 hit_nJ=0.573 leakage_mW=1398.154 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=512K ways=8 line=16 write_nJ=0.076 hit_nJ=0.548 leakage_mW=737.425 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=512K ways=8 line=16 write_nJ=0.079 hit_nJ=0.531 leakage_mW=700.604 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=512K ways=8 line=16 write_nJ=0.083 hit_nJ=0.531 leakage_mW=700.911 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=512K ways=8 line=16 write_nJ=0.09 hit_nJ=0.532 leakage_mW=702.787 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=512K ways=4 line=16 write_nJ=0.067 hit_nJ=0.28 leakage_mW=1177.54 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=512K ways=4 line=16 write_nJ=0.066 hit_nJ=0.239 leakage_mW=585.559 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=512K ways=4 line=16 write_nJ=0.07 hit_nJ=0.234 leakage_mW=566.413 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=512K ways=4 line=16 write_nJ=0.074 hit_nJ=0.234 leakage_mW=566.826 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=512K ways=4 line=16 write_nJ=0.081 hit_nJ=0.235 leakage_mW=567.986 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=512K ways=2 line=16 write_nJ=0.065 hit_nJ=0.137 leakage_mW=991.736 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=512K ways=2 line=16 write_nJ=0.058 hit_nJ=0.104 leakage_mW=464.969 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=512K ways=2 line=16 write_nJ=0.062 hit_nJ=0.103 leakage_mW=457.925 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=512K ways=2 line=16 write_nJ=0.066 hit_nJ=0.103 leakage_mW=458.392 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=512K ways=2 line=16 write_nJ=0.073 hit_nJ=0.103 leakage_mW=459.041 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=512K ways=1 line=16 write_nJ=0.063 hit_nJ=0.067 leakage_mW=835.25 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=512K ways=1 line=16 write_nJ=0.05 hit_nJ=0.045 leakage_mW=369.213 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=512K ways=1 line=16 write_nJ=0.055 hit_nJ=0.045 leakage_mW=370.215 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=512K ways=1 line=16 write_nJ=0.059 hit_nJ=0.045 leakage_mW=370.701 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=512K ways=1 line=16 write_nJ=0.066 hit_nJ=0.046 leakage_mW=370.992 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=256K ways=16 line=64 write_nJ=0.187 hit_nJ=2.918 leakage_mW=1222.207 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=256K ways=16 line=64 write_nJ=0.238 hit_nJ=3.369 leakage_mW=953.54 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=256K ways=16 line=64 write_nJ=0.244 hit_nJ=3.242 leakage_mW=901.473 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=256K ways=16 line=64 write_nJ=0.261 hit_nJ=3.242 leakage_mW=901.096 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=256K ways=16 line=64 write_nJ=0.282 hit_nJ=3.24 leakage_mW=901.602 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=256K ways=8 line=64 write_nJ=0.193 hit_nJ=1.526 leakage_mW=1181.176 hit_cycles=2 write_cycles=2 hit_cycles_alt=1 source=measured
device=STT-100us size=256K ways=8 line=64 write_nJ=0.212 hit_nJ=1.532 leakage_mW=858.677 hit_cycles=2 write_cycles=3 hit_cycles_alt=1 source=measured
device=STT-1ms size=256K ways=8 line=64 write_nJ=0.224 hit_nJ=1.532 leakage_mW=858.677 hit_cycles=2 write_cycles=4 hit_cycles_alt=1 source=measured
device=STT-10ms size=256K ways=8 line=64 write_nJ=0.24 hit_nJ=1.532 leakage_mW=858.677 hit_cycles=2 write_cycles=6 hit_cycles_alt=1 source=measured
device=STT-100ms size=256K ways=8 line=64 write_nJ=0.258 hit_nJ=1.532 leakage_mW=858.677 hit_cycles=2 write_cycles=7 hit_cycles_alt=1 source=measured
device=SRAM size=256K ways=4 line=64 write_nJ=0.175 hit_nJ=0.695 leakage_mW=866.933 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=256K ways=4 line=64 write_nJ=0.182 hit_nJ=0.638 leakage_mW=601.236 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=256K ways=4 line=64 write_nJ=0.193 hit_nJ=0.63 leakage_mW=589.215 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=256K ways=4 line=64 write_nJ=0.209 hit_nJ=0.63 leakage_mW=589.312 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=256K ways=4 line=64 write_nJ=0.228 hit_nJ=0.629 leakage_mW=588.901 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=256K ways=2 line=64 write_nJ=0.169 hit_nJ=0.339 leakage_mW=730.14 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=256K ways=2 line=64 write_nJ=0.158 hit_nJ=0.278 leakage_mW=477.417 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=256K ways=2 line=64 write_nJ=0.171 hit_nJ=0.278 leakage_mW=476.359 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=256K ways=2 line=64 write_nJ=0.187 hit_nJ=0.278 leakage_mW=476.576 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=256K ways=2 line=64 write_nJ=0.206 hit_nJ=0.277 leakage_mW=475.944 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=256K ways=1 line=64 write_nJ=0.163 hit_nJ=0.166 leakage_mW=614.931 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=256K ways=1 line=64 write_nJ=0.138 hit_nJ=0.121 leakage_mW=379.098 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=256K ways=1 line=64 write_nJ=0.152 hit_nJ=0.122 leakage_mW=385.119 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=256K ways=1 line=64 write_nJ=0.167 hit_nJ=0.122 leakage_mW=385.407 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=256K ways=1 line=64 write_nJ=0.185 hit_nJ=0.122 leakage_mW=384.654 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=256K ways=16 line=32 write_nJ=0.098 hit_nJ=1.563 leakage_mW=1072.805 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=256K ways=16 line=32 write_nJ=0.128 hit_nJ=1.804 leakage_mW=726.785 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=256K ways=16 line=32 write_nJ=0.131 hit_nJ=1.728 leakage_mW=681.962 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=256K ways=16 line=32 write_nJ=0.14 hit_nJ=1.727 leakage_mW=681.803 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=256K ways=16 line=32 write_nJ=0.153 hit_nJ=1.73 leakage_mW=683.364 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=256K ways=8 line=32 write_nJ=0.095 hit_nJ=0.763 leakage_mW=903.527 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=256K ways=8 line=32 write_nJ=0.112 hit_nJ=0.785 leakage_mW=577.11 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=256K ways=8 line=32 write_nJ=0.117 hit_nJ=0.762 leakage_mW=551.341 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=256K ways=8 line=32 write_nJ=0.126 hit_nJ=0.761 leakage_mW=551.373 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=256K ways=8 line=32 write_nJ=0.138 hit_nJ=0.763 leakage_mW=552.288 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=256K ways=4 line=32 write_nJ=0.091 hit_nJ=0.372 leakage_mW=760.96 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=256K ways=4 line=32 write_nJ=0.097 hit_nJ=0.342 leakage_mW=458.26 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=256K ways=4 line=32 write_nJ=0.104 hit_nJ=0.336 leakage_mW=445.74 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=256K ways=4 line=32 write_nJ=0.112 hit_nJ=0.336 leakage_mW=445.895 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=256K ways=4 line=32 write_nJ=0.124 hit_nJ=0.336 leakage_mW=446.354 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=256K ways=2 line=32 write_nJ=0.088 hit_nJ=0.182 leakage_mW=640.888 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=256K ways=2 line=32 write_nJ=0.085 hit_nJ=0.149 leakage_mW=363.886 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=256K ways=2 line=32 write_nJ=0.092 hit_nJ=0.148 leakage_mW=360.364 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=256K ways=2 line=32 write_nJ=0.1 hit_nJ=0.148 leakage_mW=360.595 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=256K ways=2 line=32 write_nJ=0.111 hit_nJ=0.148 leakage_mW=360.739 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=256K ways=1 line=32 write_nJ=0.086 hit_nJ=0.089 leakage_mW=539.762 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=256K ways=1 line=32 write_nJ=0.074 hit_nJ=0.065 leakage_mW=288.947 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=256K ways=1 line=32 write_nJ=0.082 hit_nJ=0.065 leakage_mW=291.342 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=256K ways=1 line=32 write_nJ=0.09 hit_nJ=0.065 leakage_mW=291.613 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=256K ways=1 line=32 write_nJ=0.1 hit_nJ=0.065 leakage_mW=291.546 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=256K ways=16 line=16 write_nJ=0.051 hit_nJ=0.837 leakage_mW=941.665 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=256K ways=16 line=16 write_nJ=0.069 hit_nJ=0.966 leakage_mW=553.952 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=256K ways=16 line=16 write_nJ=0.071 hit_nJ=0.921 leakage_mW=515.902 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=256K ways=16 line=16 write_nJ=0.075 hit_nJ=0.92 leakage_mW=515.877 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=256K ways=16 line=16 write_nJ=0.083 hit_nJ=0.924 leakage_mW=517.951 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=256K ways=8 line=16 write_nJ=0.05 hit_nJ=0.409 leakage_mW=793.08 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=256K ways=8 line=16 write_nJ=0.06 hit_nJ=0.42 leakage_mW=439.871 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=256K ways=8 line=16 write_nJ=0.063 hit_nJ=0.406 leakage_mW=417.088 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=256K ways=8 line=16 write_nJ=0.067 hit_nJ=0.406 leakage_mW=417.19 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=256K ways=8 line=16 write_nJ=0.075 hit_nJ=0.407 leakage_mW=418.603 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=256K ways=4 line=16 write_nJ=0.048 hit_nJ=0.199 leakage_mW=667.94 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=256K ways=4 line=16 write_nJ=0.052 hit_nJ=0.183 leakage_mW=349.284 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=256K ways=4 line=16 write_nJ=0.056 hit_nJ=0.179 leakage_mW=337.201 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=256K ways=4 line=16 write_nJ=0.06 hit_nJ=0.179 leakage_mW=337.381 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=256K ways=4 line=16 write_nJ=0.067 hit_nJ=0.179 leakage_mW=338.311 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=256K ways=2 line=16 write_nJ=0.046 hit_nJ=0.097 leakage_mW=562.546 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=256K ways=2 line=16 write_nJ=0.046 hit_nJ=0.08 leakage_mW=277.352 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=256K ways=2 line=16 write_nJ=0.049 hit_nJ=0.079 leakage_mW=272.615 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=256K ways=2 line=16 write_nJ=0.054 hit_nJ=0.079 leakage_mW=272.84 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=256K ways=2 line=16 write_nJ=0.06 hit_nJ=0.079 leakage_mW=273.42 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=256K ways=1 line=16 write_nJ=0.045 hit_nJ=0.048 leakage_mW=473.782 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=256K ways=1 line=16 write_nJ=0.04 hit_nJ=0.035 leakage_mW=220.234 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=256K ways=1 line=16 write_nJ=0.044 hit_nJ=0.035 leakage_mW=220.399 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=256K ways=1 line=16 write_nJ=0.048 hit_nJ=0.035 leakage_mW=220.645 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=256K ways=1 line=16 write_nJ=0.054 hit_nJ=0.035 leakage_mW=220.975 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=128K ways=16 line=64 write_nJ=0.134 hit_nJ=2.08 leakage_mW=693.277 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=128K ways=16 line=64 write_nJ=0.188 hit_nJ=2.583 leakage_mW=568.783 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=128K ways=16 line=64 write_nJ=0.195 hit_nJ=2.479 leakage_mW=536.671 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=128K ways=16 line=64 write_nJ=0.212 hit_nJ=2.479 leakage_mW=536.342 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=128K ways=16 line=64 write_nJ=0.233 hit_nJ=2.478 leakage_mW=537.024 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=128K ways=8 line=64 write_nJ=0.129 hit_nJ=1.015 leakage_mW=583.885 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=128K ways=8 line=64 write_nJ=0.164 hit_nJ=1.124 leakage_mW=451.648 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=128K ways=8 line=64 write_nJ=0.173 hit_nJ=1.093 leakage_mW=433.879 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=128K ways=8 line=64 write_nJ=0.19 hit_nJ=1.093 leakage_mW=433.739 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=128K ways=8 line=64 write_nJ=0.21 hit_nJ=1.092 leakage_mW=434.018 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=128K ways=4 line=64 write_nJ=0.13 hit_nJ=0.519 leakage_mW=507.852 hit_cycles=2 write_cycles=2 hit_cycles_alt=1 source=measured
device=STT-100us size=128K ways=4 line=64 write_nJ=0.15 hit_nJ=0.519 leakage_mW=363.607 hit_cycles=2 write_cycles=3 hit_cycles_alt=1 source=measured
device=STT-1ms size=128K ways=4 line=64 write_nJ=0.162 hit_nJ=0.519 leakage_mW=363.607 hit_cycles=2 write_cycles=4 hit_cycles_alt=1 source=measured
device=STT-10ms size=128K ways=4 line=64 write_nJ=0.177 hit_nJ=0.519 leakage_mW=363.607 hit_cycles=2 write_cycles=6 hit_cycles_alt=1 source=measured
device=STT-100ms size=128K ways=4 line=64 write_nJ=0.196 hit_nJ=0.52 leakage_mW=363.607 hit_cycles=2 write_cycles=7 hit_cycles_alt=1 source=measured
device=SRAM size=128K ways=2 line=64 write_nJ=0.121 hit_nJ=0.242 leakage_mW=414.16 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=128K ways=2 line=64 write_nJ=0.125 hit_nJ=0.213 leakage_mW=284.778 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=128K ways=2 line=64 write_nJ=0.137 hit_nJ=0.212 leakage_mW=283.589 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=128K ways=2 line=64 write_nJ=0.152 hit_nJ=0.212 leakage_mW=283.663 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=128K ways=2 line=64 write_nJ=0.17 hit_nJ=0.212 leakage_mW=283.488 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=128K ways=1 line=64 write_nJ=0.112 hit_nJ=0.113 leakage_mW=325.697 hit_cycles=2 write_cycles=2 hit_cycles_alt=1 source=measured
device=STT-100us size=128K ways=1 line=64 write_nJ=0.108 hit_nJ=0.09 leakage_mW=196.05 hit_cycles=2 write_cycles=3 hit_cycles_alt=1 source=measured
device=STT-1ms size=128K ways=1 line=64 write_nJ=0.12 hit_nJ=0.09 leakage_mW=196.05 hit_cycles=2 write_cycles=4 hit_cycles_alt=1 source=measured
device=STT-10ms size=128K ways=1 line=64 write_nJ=0.135 hit_nJ=0.09 leakage_mW=196.05 hit_cycles=2 write_cycles=6 hit_cycles_alt=1 source=measured
device=STT-100ms size=128K ways=1 line=64 write_nJ=0.153 hit_nJ=0.09 leakage_mW=196.05 hit_cycles=2 write_cycles=7 hit_cycles_alt=1 source=measured
device=SRAM size=128K ways=16 line=32 write_nJ=0.07 hit_nJ=1.114 leakage_mW=608.531 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=128K ways=16 line=32 write_nJ=0.101 hit_nJ=1.383 leakage_mW=433.524 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=128K ways=16 line=32 write_nJ=0.105 hit_nJ=1.321 leakage_mW=405.99 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=128K ways=16 line=32 write_nJ=0.114 hit_nJ=1.321 leakage_mW=405.816 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=128K ways=16 line=32 write_nJ=0.127 hit_nJ=1.323 leakage_mW=407.034 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=128K ways=8 line=32 write_nJ=0.068 hit_nJ=0.544 leakage_mW=512.511 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=128K ways=8 line=32 write_nJ=0.088 hit_nJ=0.602 leakage_mW=344.244 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=128K ways=8 line=32 write_nJ=0.093 hit_nJ=0.582 leakage_mW=328.228 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=128K ways=8 line=32 write_nJ=0.102 hit_nJ=0.582 leakage_mW=328.183 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=128K ways=8 line=32 write_nJ=0.114 hit_nJ=0.583 leakage_mW=328.961 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=128K ways=4 line=32 write_nJ=0.065 hit_nJ=0.265 leakage_mW=431.642 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=128K ways=4 line=32 write_nJ=0.077 hit_nJ=0.262 leakage_mW=273.35 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=128K ways=4 line=32 write_nJ=0.083 hit_nJ=0.257 leakage_mW=265.361 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=128K ways=4 line=32 write_nJ=0.091 hit_nJ=0.257 leakage_mW=265.402 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=128K ways=4 line=32 write_nJ=0.102 hit_nJ=0.257 leakage_mW=265.863 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=128K ways=2 line=32 write_nJ=0.058 hit_nJ=0.117 leakage_mW=346.743 hit_cycles=2 write_cycles=2 hit_cycles_alt=1 source=measured
device=STT-100us size=128K ways=2 line=32 write_nJ=0.056 hit_nJ=0.092 leakage_mW=185.298 hit_cycles=2 write_cycles=3 hit_cycles_alt=1 source=measured
device=STT-1ms size=128K ways=2 line=32 write_nJ=0.062 hit_nJ=0.092 leakage_mW=185.298 hit_cycles=2 write_cycles=4 hit_cycles_alt=1 source=measured
device=STT-10ms size=128K ways=2 line=32 write_nJ=0.07 hit_nJ=0.092 leakage_mW=185.298 hit_cycles=2 write_cycles=6 hit_cycles_alt=1 source=measured
device=STT-100ms size=128K ways=2 line=32 write_nJ=0.08 hit_nJ=0.092 leakage_mW=185.298 hit_cycles=2 write_cycles=7 hit_cycles_alt=1 source=measured
device=SRAM size=128K ways=1 line=32 write_nJ=0.059 hit_nJ=0.061 leakage_mW=288.864 hit_cycles=2 write_cycles=2 hit_cycles_alt=1 source=measured
device=STT-100us size=128K ways=1 line=32 write_nJ=0.059 hit_nJ=0.051 leakage_mW=186.218 hit_cycles=2 write_cycles=3 hit_cycles_alt=1 source=measured
device=STT-1ms size=128K ways=1 line=32 write_nJ=0.066 hit_nJ=0.051 leakage_mW=186.49 hit_cycles=2 write_cycles=4 hit_cycles_alt=1 source=measured
device=STT-10ms size=128K ways=1 line=32 write_nJ=0.074 hit_nJ=0.051 leakage_mW=186.761 hit_cycles=2 write_cycles=6 hit_cycles_alt=1 source=measured
device=STT-100ms size=128K ways=1 line=32 write_nJ=0.084 hit_nJ=0.051 leakage_mW=187.033 hit_cycles=2 write_cycles=7 hit_cycles_alt=1 source=measured
device=SRAM size=128K ways=16 line=16 write_nJ=0.037 hit_nJ=0.597 leakage_mW=534.144 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=128K ways=16 line=16 write_nJ=0.054 hit_nJ=0.741 leakage_mW=330.431 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=128K ways=16 line=16 write_nJ=0.057 hit_nJ=0.704 leakage_mW=307.13 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=128K ways=16 line=16 write_nJ=0.061 hit_nJ=0.704 leakage_mW=307.056 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=128K ways=16 line=16 write_nJ=0.069 hit_nJ=0.707 leakage_mW=308.509 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=128K ways=8 line=16 write_nJ=0.035 hit_nJ=0.291 leakage_mW=449.861 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=128K ways=8 line=16 write_nJ=0.047 hit_nJ=0.322 leakage_mW=262.382 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=128K ways=8 line=16 write_nJ=0.05 hit_nJ=0.31 leakage_mW=248.304 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=128K ways=8 line=16 write_nJ=0.055 hit_nJ=0.31 leakage_mW=248.316 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=128K ways=8 line=16 write_nJ=0.062 hit_nJ=0.311 leakage_mW=249.334 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=128K ways=4 line=16 write_nJ=0.034 hit_nJ=0.142 leakage_mW=378.878 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=128K ways=4 line=16 write_nJ=0.041 hit_nJ=0.14 leakage_mW=208.347 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=128K ways=4 line=16 write_nJ=0.045 hit_nJ=0.137 leakage_mW=200.744 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=128K ways=4 line=16 write_nJ=0.049 hit_nJ=0.137 leakage_mW=200.813 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=128K ways=4 line=16 write_nJ=0.056 hit_nJ=0.137 leakage_mW=201.509 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=128K ways=2 line=16 write_nJ=0.033 hit_nJ=0.069 leakage_mW=319.095 hit_cycles=2 write_cycles=2 source=derived
device=STT-100us size=128K ways=2 line=16 write_nJ=0.036 hit_nJ=0.061 leakage_mW=165.439 hit_cycles=2 write_cycles=3 source=derived
device=STT-1ms size=128K ways=2 line=16 write_nJ=0.04 hit_nJ=0.06 leakage_mW=162.295 hit_cycles=2 write_cycles=4 source=derived
device=STT-10ms size=128K ways=2 line=16 write_nJ=0.044 hit_nJ=0.06 leakage_mW=162.397 hit_cycles=2 write_cycles=6 source=derived
device=STT-100ms size=128K ways=2 line=16 write_nJ=0.05 hit_nJ=0.06 leakage_mW=162.858 hit_cycles=2 write_cycles=7 source=derived
device=SRAM size=128K ways=1 line=16 write_nJ=0.033 hit_nJ=0.035 leakage_mW=277.744 hit_cycles=2 write_cycles=2 hit_cycles_alt=1 source=measured
device=STT-100us size=128K ways=1 line=16 write_nJ=0.033 hit_nJ=0.028 leakage_mW=141.139 hit_cycles=2 write_cycles=3 hit_cycles_alt=1 source=measured
device=STT-1ms size=128K ways=1 line=16 write_nJ=0.037 hit_nJ=0.028 leakage_mW=141.282 hit_cycles=2 write_cycles=4 hit_cycles_alt=1 source=measured
device=STT-10ms size=128K ways=1 line=16 write_nJ=0.041 hit_nJ=0.028 leakage_mW=141.425 hit_cycles=2 write_cycles=6 hit_cycles_alt=1 source=measured
device=STT-100ms size=128K ways=1 line=16 write_nJ=0.047 hit_nJ=0.028 leakage_mW=141.568 hit_cycles=2 write_cycles=7 hit_cycles_alt=1 source=measured
)params";

}  // namespace halls
