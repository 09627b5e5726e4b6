import { ApiClient } from "./api.js";
import { renderControls, renderGraph, renderLoader } from "./render.js";
import { ExplorerViewModel } from "./viewmodel.js";

const api = new ApiClient("");
const vm = new ExplorerViewModel(api);

const loader = document.getElementById("loader") as HTMLElement;
const controls = document.getElementById("controls") as HTMLElement;
const svg = document.getElementById("graph") as unknown as SVGSVGElement;

function renderAll(): void {
  renderLoader(vm, loader);
  renderControls(vm, controls);
  renderGraph(vm, svg);
}

vm.onChange(renderAll);
renderAll();
