from platjones.circuits.register import RegisterLayout, decode_index, encode_path, layout
from platjones.circuits.circuitsim import (GateOp, closure_gates, compile_braid, gate_counts,
                                           run_circuit)
from platjones.circuits.sampling import (AncillaMeasurementRV, SampleReport,
                                         approximate_colored_jones, chernoff_samples,
                                         hadamard_test)
