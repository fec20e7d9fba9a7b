import { Explorer } from "./explorer.js";

const root = document.getElementById("app");
if (root) {
  void new Explorer(root).init();
}
