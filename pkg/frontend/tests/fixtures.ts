/**
 * Verbatim response payloads captured from the running model service.
 * Tests mock fetch with these so the UI is checked against exactly what
 * the service emits, with zero client-side model math.
 */

import type {
  ContourResponse,
  EvaluateResponse,
  ScenarioListResponse,
  ScenarioRunResponse,
  SweepResponse,
} from "../src/types.js";

export const EVALUATE_ADD16: EvaluateResponse = {
  "params": {
    "machine": {
      "xbs": 1024.0,
      "rows": 1024.0,
      "cols": 1024.0,
      "cycle_time": 1e-08,
      "ebit_pim": 1e-13,
      "bw": 1000000000000.0,
      "ebit_cpu": 1.5e-11
    },
    "workload": {
      "oc": 144.0,
      "pac": 0.0,
      "dio_cpu": 48.0,
      "dio_combined": 16.0,
      "label": "16-bit ADD"
    }
  },
  "result": {
    "tp_pim_gops": 728.1777777777778,
    "tp_cpu_gops": 20.833333333333332,
    "tp_combined_gops": 57.559618330265174,
    "p_pim_w": 10.48576,
    "p_cpu_w": 15.0,
    "p_combined_w": 14.643166903219461,
    "epc_pim_jgop": 0.0144,
    "epc_cpu_jgop": 0.72,
    "epc_combined_jgop": 0.2544,
    "tp_cpu_combined_gops": 62.5,
    "tp_pim_per_cycle": 7281.777777777778,
    "pim_gops_per_watt": 69.44444444444444,
    "duty_pim": 0.07904610671575722,
    "duty_cpu": 0.9209538932842428,
    "throttle_factor_pim": 1.0,
    "throttle_factor_cpu": 1.0,
    "cc_cycles": 144.0,
    "oc_cycles": 144.0,
    "pac_cycles": 0.0,
    "dio_cpu_bits": 48.0,
    "dio_combined_bits": 16.0
  },
  "tdp_flags": []
};

export const EVALUATE_ADD16_DIO48: EvaluateResponse = {
  "params": {
    "machine": {
      "xbs": 1024.0,
      "rows": 1024.0,
      "cols": 1024.0,
      "cycle_time": 1e-08,
      "ebit_pim": 1e-13,
      "bw": 1000000000000.0,
      "ebit_cpu": 1.5e-11
    },
    "workload": {
      "oc": 144.0,
      "pac": 0.0,
      "dio_cpu": 48.0,
      "dio_combined": 48.0,
      "label": "workload"
    }
  },
  "result": {
    "tp_pim_gops": 728.1777777777778,
    "tp_cpu_gops": 20.833333333333332,
    "tp_combined_gops": 20.253865590680057,
    "p_pim_w": 10.48576,
    "p_cpu_w": 15.0,
    "p_combined_w": 14.874438889795433,
    "epc_pim_jgop": 0.0144,
    "epc_cpu_jgop": 0.72,
    "epc_combined_jgop": 0.7343999999999999,
    "tp_cpu_combined_gops": 20.833333333333332,
    "tp_pim_per_cycle": 7281.777777777778,
    "pim_gops_per_watt": 69.44444444444444,
    "duty_pim": 0.027814451647357255,
    "duty_cpu": 0.9721855483526427,
    "throttle_factor_pim": 1.0,
    "throttle_factor_cpu": 1.0,
    "cc_cycles": 144.0,
    "oc_cycles": 144.0,
    "pac_cycles": 0.0,
    "dio_cpu_bits": 48.0,
    "dio_combined_bits": 48.0
  },
  "tdp_flags": []
};

export const RUN_ADD16: ScenarioRunResponse = {
  "scenario": "table6/add16",
  "passed": true,
  "checks": [
    {
      "field": "cc_cycles",
      "expected": 144.0,
      "computed": 144.0,
      "compared": 144.0,
      "passed": true,
      "citation": "Table 6, 16-bit ADD, CC row"
    },
    {
      "field": "tp_pim_gops",
      "expected": 728,
      "computed": 728.1777777777778,
      "compared": 728.0,
      "passed": true,
      "citation": "Table 6, 16-bit ADD, PIM throughput"
    },
    {
      "field": "tp_cpu_gops",
      "expected": 20.8,
      "computed": 20.833333333333332,
      "compared": 20.8,
      "passed": true,
      "citation": "Table 6, 16-bit ADD, CPU throughput"
    },
    {
      "field": "tp_combined_gops",
      "expected": 57.6,
      "computed": 57.559618330265174,
      "compared": 57.6,
      "passed": true,
      "citation": "Table 6, 16-bit ADD, combined throughput"
    },
    {
      "field": "p_pim_w",
      "expected": 10.5,
      "computed": 10.48576,
      "compared": 10.5,
      "passed": true,
      "citation": "Table 6, PIM power row"
    },
    {
      "field": "p_cpu_w",
      "expected": 15.0,
      "computed": 15.0,
      "compared": 15.0,
      "passed": true,
      "citation": "Table 6, CPU power row"
    },
    {
      "field": "p_combined_w",
      "expected": 14.6,
      "computed": 14.643166903219461,
      "compared": 14.6,
      "passed": true,
      "citation": "Table 6, 16-bit ADD, combined power"
    }
  ],
  "params": {
    "machine": {
      "xbs": 1024.0,
      "rows": 1024.0,
      "cols": 1024.0,
      "cycle_time": 1e-08,
      "ebit_pim": 1e-13,
      "bw": 1000000000000.0,
      "ebit_cpu": 1.5e-11
    },
    "workload": {
      "oc": 144.0,
      "pac": 0.0,
      "dio_cpu": 48.0,
      "dio_combined": 16.0,
      "label": "16-bit ADD"
    }
  },
  "result": {
    "tp_pim_gops": 728.1777777777778,
    "tp_cpu_gops": 20.833333333333332,
    "tp_combined_gops": 57.559618330265174,
    "p_pim_w": 10.48576,
    "p_cpu_w": 15.0,
    "p_combined_w": 14.643166903219461,
    "epc_pim_jgop": 0.0144,
    "epc_cpu_jgop": 0.72,
    "epc_combined_jgop": 0.2544,
    "tp_cpu_combined_gops": 62.5,
    "tp_pim_per_cycle": 7281.777777777778,
    "pim_gops_per_watt": 69.44444444444444,
    "duty_pim": 0.07904610671575722,
    "duty_cpu": 0.9209538932842428,
    "throttle_factor_pim": 1.0,
    "throttle_factor_cpu": 1.0,
    "cc_cycles": 144.0,
    "oc_cycles": 144.0,
    "pac_cycles": 0.0,
    "dio_cpu_bits": 48.0,
    "dio_combined_bits": 16.0
  }
};

export const SCENARIO_LIST: ScenarioListResponse = {
  "scenarios": [
    {
      "id": "walkthrough/shifted-vector-add",
      "description": "16-bit shifted vector-add on the default machine",
      "citation": "throughput/power/energy walkthrough (Figure 4 case 2)",
      "expectations": 8
    },
    {
      "id": "table3/cpu-pure",
      "description": "data transfer only: two 16-bit inputs and the output move",
      "citation": "Table 3, data transfer throughput",
      "expectations": 2
    },
    {
      "id": "table3/inputs-only",
      "description": "data transfer only: inputs move, result stays in memory",
      "citation": "Table 3, data transfer throughput",
      "expectations": 2
    },
    {
      "id": "table3/compaction",
      "description": "data transfer only: only the 16-bit result moves",
      "citation": "Table 3, data transfer throughput",
      "expectations": 2
    },
    {
      "id": "table3/filter",
      "description": "data transfer only: 200-bit records at 1% selectivity plus bit vector",
      "citation": "Table 3, data transfer throughput",
      "expectations": 2
    },
    {
      "id": "table6/or16",
      "description": "16-bit OR compaction on the default machine",
      "citation": "Table 6, 16-bit OR column",
      "expectations": 7
    },
    {
      "id": "table6/add16",
      "description": "16-bit ADD compaction on the default machine",
      "citation": "Table 6, 16-bit ADD column",
      "expectations": 7
    },
    {
      "id": "table6/mult16",
      "description": "16-bit MULTIPLY compaction on the default machine",
      "citation": "Table 6, 16-bit MULTIPLY column",
      "expectations": 7
    },
    {
      "id": "table6/mult32",
      "description": "32-bit MULTIPLY compaction on the default machine",
      "citation": "Table 6, 32-bit MULTIPLY column",
      "expectations": 7
    },
    {
      "id": "table6/mult64",
      "description": "64-bit MULTIPLY compaction on the default machine",
      "citation": "Table 6, 64-bit MULTIPLY column",
      "expectations": 7
    },
    {
      "id": "table7/hadamard-512",
      "description": "8-bit Hadamard product on 512 crossbars of 512 rows",
      "citation": "Table 7, row with 512 crossbars",
      "expectations": 5
    },
    {
      "id": "table7/hadamard-1024",
      "description": "8-bit Hadamard product on 1024 crossbars of 512 rows",
      "citation": "Table 7, row with 1024 crossbars",
      "expectations": 5
    },
    {
      "id": "table7/hadamard-4096",
      "description": "8-bit Hadamard product on 4096 crossbars of 1024 rows",
      "citation": "Table 7, row with 4096 crossbars",
      "expectations": 5
    },
    {
      "id": "table7/hadamard-16384",
      "description": "8-bit Hadamard product on 16384 crossbars of 1024 rows",
      "citation": "Table 7, row with 16384 crossbars",
      "expectations": 5
    },
    {
      "id": "table8/conv-p3-r512",
      "description": "3x3 8-bit convolution cycle count at 512 rows",
      "citation": "Table 8, convolution computation complexity",
      "expectations": 1
    },
    {
      "id": "table8/conv-p3-r1024",
      "description": "3x3 8-bit convolution cycle count at 1024 rows",
      "citation": "Table 8, convolution computation complexity",
      "expectations": 1
    },
    {
      "id": "table8/conv-p5-r512",
      "description": "5x5 8-bit convolution cycle count at 512 rows",
      "citation": "Table 8, convolution computation complexity",
      "expectations": 1
    },
    {
      "id": "table8/conv-p5-r1024",
      "description": "5x5 8-bit convolution cycle count at 1024 rows",
      "citation": "Table 8, convolution computation complexity",
      "expectations": 1
    },
    {
      "id": "table9/conv-p3-1024",
      "description": "3x3 8-bit convolution on 1024 crossbars of 1024 rows",
      "citation": "Table 9, P=3, XBs=1024",
      "expectations": 4
    },
    {
      "id": "table9/conv-p3-8192",
      "description": "3x3 8-bit convolution on 8192 crossbars of 1024 rows",
      "citation": "Table 9, P=3, XBs=8192",
      "expectations": 4
    },
    {
      "id": "table9/conv-p3-65536",
      "description": "3x3 8-bit convolution on 65536 crossbars of 1024 rows",
      "citation": "Table 9, P=3, XBs=65536",
      "expectations": 4
    },
    {
      "id": "table9/conv-p5-1024",
      "description": "5x5 8-bit convolution on 1024 crossbars of 1024 rows",
      "citation": "Table 9, P=5, XBs=1024",
      "expectations": 4
    },
    {
      "id": "table9/conv-p5-8192",
      "description": "5x5 8-bit convolution on 8192 crossbars of 1024 rows",
      "citation": "Table 9, P=5, XBs=8192",
      "expectations": 4
    },
    {
      "id": "table9/conv-p5-65536",
      "description": "5x5 8-bit convolution on 65536 crossbars of 1024 rows",
      "citation": "Table 9, P=5, XBs=65536",
      "expectations": 4
    },
    {
      "id": "table10/floatpim",
      "description": "bfloat16 multiply/add on 65536 crossbars, published technology parameters",
      "citation": "Table 10, published-parameters row",
      "expectations": 5
    },
    {
      "id": "table10/floatpim-default",
      "description": "bfloat16 multiply/add on 65536 crossbars, default technology parameters",
      "citation": "Table 10, default-parameters row",
      "expectations": 4
    },
    {
      "id": "fipdp/xbs512-r512",
      "description": "fixed-point dot product on 512 crossbars of 512 rows",
      "citation": "fixed-point dot product case study",
      "expectations": 4
    },
    {
      "id": "fipdp/xbs4096-r1024",
      "description": "fixed-point dot product on 4096 crossbars of 1024 rows",
      "citation": "fixed-point dot product case study",
      "expectations": 4
    },
    {
      "id": "figure4/case-1a",
      "description": "compaction, or16, 1024 crossbars, 1000 Gbps bus",
      "citation": "Figure 4, compaction columns",
      "expectations": 1
    },
    {
      "id": "figure4/case-1b",
      "description": "compaction, add16, 1024 crossbars, 1000 Gbps bus",
      "citation": "Figure 4, compaction columns",
      "expectations": 2
    },
    {
      "id": "figure4/case-1c",
      "description": "compaction, mult16, 1024 crossbars, 1000 Gbps bus",
      "citation": "Figure 4, compaction columns",
      "expectations": 1
    },
    {
      "id": "figure4/case-1d",
      "description": "compaction, or16, 16384 crossbars, 1000 Gbps bus",
      "citation": "Figure 4, compaction columns",
      "expectations": 1
    },
    {
      "id": "figure4/case-1e",
      "description": "compaction, add16, 1024 crossbars, 16000 Gbps bus",
      "citation": "Figure 4, compaction columns",
      "expectations": 0
    },
    {
      "id": "figure4/case-1f",
      "description": "compaction, add16, 16384 crossbars, 16000 Gbps bus",
      "citation": "Figure 4, compaction columns",
      "expectations": 0
    },
    {
      "id": "figure4/case-2",
      "description": "shifted vector-add (same configuration as walkthrough/shifted-vector-add)",
      "citation": "Figure 4, case 2 column",
      "expectations": 8
    },
    {
      "id": "figure4/case-3a",
      "description": "filter, 200-bit records at 1%, 1024 crossbars, 1000 Gbps bus",
      "citation": "Figure 4, filter columns",
      "expectations": 0
    },
    {
      "id": "figure4/case-3b",
      "description": "filter, 200-bit records at 1%, 16384 crossbars, 1000 Gbps bus",
      "citation": "Figure 4, filter columns",
      "expectations": 0
    },
    {
      "id": "figure4/case-3c",
      "description": "filter, 200-bit records at 1%, 1024 crossbars, 16000 Gbps bus",
      "citation": "Figure 4, filter columns",
      "expectations": 0
    },
    {
      "id": "figure4/case-3d",
      "description": "filter, 200-bit records at 1%, 16384 crossbars, 16000 Gbps bus",
      "citation": "Figure 4, filter columns",
      "expectations": 0
    },
    {
      "id": "figure4/case-4",
      "description": "per-crossbar 16-bit vector sum with CPU final reduction",
      "citation": "Figure 4, reduction column",
      "expectations": 0
    }
  ]
};

export const SWEEP_SMALL: SweepResponse = {
  "params": {
    "machine": {
      "xbs": 1024.0,
      "rows": 1024.0,
      "cols": 1024.0,
      "cycle_time": 1e-08,
      "ebit_pim": 1e-13,
      "bw": 1000000000000.0,
      "ebit_cpu": 1.5e-11
    },
    "workload": {
      "oc": 144.0,
      "pac": 0.0,
      "dio_cpu": 48.0,
      "dio_combined": 16.0,
      "label": "workload"
    }
  },
  "axes": [
    {
      "param": "cc",
      "values": [
        10.0,
        215.44346900318823,
        4641.588833612777,
        100000.0
      ]
    },
    {
      "param": "dio_combined",
      "values": [
        1.0,
        16.0,
        256.0
      ]
    }
  ],
  "metrics": [
    "tp_combined_gops"
  ],
  "values": [
    [
      [
        912.9356699077814
      ],
      [
        62.12967825973194
      ],
      [
        3.904795350376377
      ]
    ],
    [
      [
        327.3719951242381
      ],
      [
        55.38745760569673
      ],
      [
        3.875148466655661
      ]
    ],
    [
      [
        22.09181151975778
      ],
      [
        16.593202866290024
      ],
      [
        3.3303843825439263
      ]
    ],
    [
      [
        1.047477640086069
      ],
      [
        1.0312740918065575
      ],
      [
        0.8266687871582171
      ]
    ]
  ]
};

export const CONTOUR_62: ContourResponse = {
  "machine": {
    "xbs": 1024.0,
    "rows": 1024.0,
    "cols": 1024.0,
    "cycle_time": 1e-08,
    "ebit_pim": 1e-13,
    "bw": 1000000000000.0,
    "ebit_cpu": 1.5e-11
  },
  "lines": [
    {
      "metric": "tp_combined",
      "level": 62,
      "points": [
        [
          10.0,
          16.03366482642389
        ],
        [
          55.30139345890053,
          15.601637072032213
        ],
        [
          305.8244118496126,
          13.212463388954289
        ],
        [
          1691.2516129032258,
          0.0
        ]
      ],
      "coefficients": {
        "cc": 9.5367431640625e-15,
        "dio": 1e-12,
        "rhs": 1.6129032258064515e-11
      }
    }
  ]
};

export const RUN_FLOATPIM: ScenarioRunResponse = {
  "scenario": "table10/floatpim",
  "passed": true,
  "checks": [
    {
      "field": "cc_cycles",
      "expected": 336.5,
      "computed": 336.5,
      "compared": 336.5,
      "passed": true,
      "citation": "Table 10, CC column"
    },
    {
      "field": "tp_pim_per_cycle",
      "expected": 199432,
      "computed": 199431.9881129272,
      "compared": 199432.0,
      "passed": true,
      "citation": "Table 10, throughput-per-cycle column"
    },
    {
      "field": "tp_pim_gops",
      "expected": 181302,
      "computed": 181301.80737538837,
      "compared": 181302.0,
      "passed": true,
      "citation": "Table 10, PIM throughput column"
    },
    {
      "field": "p_pim_w",
      "expected": 18,
      "computed": 17.69233687272727,
      "compared": 18.0,
      "passed": true,
      "citation": "Table 10, PIM power column"
    },
    {
      "field": "pim_gops_per_watt",
      "expected": 10247,
      "computed": 10247.476558897373,
      "compared": 10247.476558897373,
      "passed": true,
      "citation": "Table 10, GOPS/Watt column"
    }
  ],
  "params": {
    "machine": {
      "xbs": 65536.0,
      "rows": 1024.0,
      "cols": 1024.0,
      "cycle_time": 1.1e-09,
      "ebit_pim": 2.9e-16,
      "bw": 1000000000000.0,
      "ebit_cpu": 1.5e-11
    },
    "workload": {
      "oc": 336.5,
      "pac": 0.0,
      "dio_cpu": 16.0,
      "dio_combined": 0.0,
      "label": "bfloat16-mul-add"
    }
  },
  "result": {
    "tp_pim_gops": 181301.80737538837,
    "tp_cpu_gops": 62.5,
    "tp_combined_gops": 181301.80737538837,
    "p_pim_w": 17.69233687272727,
    "p_cpu_w": 15.0,
    "p_combined_w": 17.692336872727275,
    "epc_pim_jgop": 9.7585e-05,
    "epc_cpu_jgop": 0.24,
    "epc_combined_jgop": 9.7585e-05,
    "tp_cpu_combined_gops": null,
    "tp_pim_per_cycle": 199431.9881129272,
    "pim_gops_per_watt": 10247.476558897373,
    "duty_pim": 1.0,
    "duty_cpu": 0.0,
    "throttle_factor_pim": 1.0,
    "throttle_factor_cpu": 1.0,
    "cc_cycles": 336.5,
    "oc_cycles": 336.5,
    "pac_cycles": 0.0,
    "dio_cpu_bits": 16.0,
    "dio_combined_bits": 0.0
  }
};

export const EVALUATE_FLOATPIM_DEFAULT: EvaluateResponse = {
  "params": {
    "machine": {
      "xbs": 65536.0,
      "rows": 1024.0,
      "cols": 1024.0,
      "cycle_time": 1e-08,
      "ebit_pim": 1e-13,
      "bw": 1000000000000.0,
      "ebit_cpu": 1.5e-11
    },
    "workload": {
      "oc": 336.5,
      "pac": 0.0,
      "dio_cpu": 16.0,
      "dio_combined": 0.0,
      "label": "bfloat16-mul-add"
    }
  },
  "result": {
    "tp_pim_gops": 19943.198811292717,
    "tp_cpu_gops": 62.5,
    "tp_combined_gops": 19943.198811292717,
    "p_pim_w": 671.08864,
    "p_cpu_w": 15.0,
    "p_combined_w": 671.08864,
    "epc_pim_jgop": 0.03365,
    "epc_cpu_jgop": 0.24,
    "epc_combined_jgop": 0.03365,
    "tp_cpu_combined_gops": null,
    "tp_pim_per_cycle": 199431.98811292718,
    "pim_gops_per_watt": 29.71768202080237,
    "duty_pim": 1.0,
    "duty_cpu": 0.0,
    "throttle_factor_pim": 1.0,
    "throttle_factor_cpu": 1.0,
    "cc_cycles": 336.5,
    "oc_cycles": 336.5,
    "pac_cycles": 0.0,
    "dio_cpu_bits": 16.0,
    "dio_combined_bits": 0.0
  },
  "tdp_flags": []
};
