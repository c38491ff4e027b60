/* Copyright 2026 The matchembed Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Compiles the public header as C and makes a few calls through it. */

#include <stdio.h>

#include "matchembed/matchembed.h"

int main(void) {
  me_graph* g = NULL;
  me_result* r = NULL;
  if (me_gen_adversarial(3, 1e-6, &g) != ME_OK) return 1;
  if (me_solve_exact(g, ME_OBJECTIVE_MCM, &r) != ME_OK) return 1;
  if (me_result_pair_count(r) != 2) return 1;
  printf("value %.6f\n", me_result_value(r));
  me_result_free(r);
  me_graph_free(g);
  return 0;
}
