import init, { dlPencil, bezoutMatrix, conditionReport } from "./pkg/polylin_wasm_demo.js";

const $ = (id) => document.getElementById(id);

function show(out, f) {
  out.classList.remove("err");
  try {
    out.textContent = f();
  } catch (e) {
    out.classList.add("err");
    out.textContent = String(e);
  }
}

function dl() {
  const r = JSON.parse(dlPencil($("dl-doc").value, $("dl-ansatz").value));
  const verdict = typeof r.verdict === "string" ? r.verdict : JSON.stringify(r.verdict);
  return `X =\n${r.X}\nY =\n${r.Y}\nverdict: ${verdict}`;
}

function bezout() {
  const r = JSON.parse(bezoutMatrix($("bz-p1").value, $("bz-p2").value, Number($("bz-grade").value), $("bz-cheb").checked));
  return `${r.text}\nkernel dimension: ${r.kernel_dim}\ndeterminant: ${r.determinant}`;
}

function condition() {
  const r = JSON.parse(conditionReport(Number($("cd-seed").value), Number($("cd-n").value), Number($("cd-k").value), Number($("cd-trials").value)));
  const rows = r.eigenvalues.map((e) => {
    const ratio = e.ratio === null ? "      (outside)" : e.ratio.toExponential(3).padStart(15);
    const pert = e.perturbations.length ? (e.perturbations.every((p) => p.passes) ? "ok" : "FAIL") : "-";
    return `${e.re.toFixed(6).padStart(11)} ${e.im.toFixed(6).padStart(11)} ${ratio}  ${pert}`;
  });
  return [
    `‖P‖ = ${r.p_norm.toExponential(3)}   ‖L‖ = ${r.l_norm.toExponential(3)} (bound ${r.l_bound.toExponential(3)})`,
    `ratio bound ${r.ratio_bound.toExponential(3)}`,
    "         re          im           r̂  perturbation",
    ...rows,
    `bounds ${r.passes ? "hold" : "VIOLATED"}`,
  ].join("\n");
}

await init();
$("dl-run").onclick = () => show($("dl-out"), dl);
$("bz-run").onclick = () => show($("bz-out"), bezout);
$("cd-run").onclick = () => show($("cd-out"), condition);
for (const [id, f] of [["dl-out", dl], ["bz-out", bezout], ["cd-out", condition]]) show($(id), f);
