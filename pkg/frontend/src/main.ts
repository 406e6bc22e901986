import { ApiClient } from "./api.js";
import { mountApp } from "./dom.js";

declare global {
  interface Window {
    API_BASE?: string;
  }
}

const base = window.API_BASE ?? "http://localhost:8080";
const root = document.getElementById("app");
if (!root) {
  throw new Error("missing #app mount point");
}
mountApp(root, new ApiClient(base));
